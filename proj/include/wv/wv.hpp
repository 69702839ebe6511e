/*
 * wv.hpp
 * ------
 * Umbrella header: exact symbolic computation in symmetric and enveloping
 * algebras of the Witt and Virasoro algebras.
 */
#pragma once

#include "wv/algebra.hpp"
#include "wv/brackets.hpp"
#include "wv/elements.hpp"
#include "wv/errors.hpp"
#include "wv/growth.hpp"
#include "wv/io.hpp"
#include "wv/linalg.hpp"
#include "wv/orders.hpp"
#include "wv/rational.hpp"
#include "wv/reduction.hpp"
#include "wv/report_io.hpp"
#include "wv/sampling.hpp"
#include "wv/suite.hpp"
#include "wv/verma.hpp"
#include "wv/words.hpp"
