#pragma once

#include "skewrs/errors.hpp"
#include "skewrs/field_concepts.hpp"
#include "skewrs/expression_parser.hpp"
#include "skewrs/galois_field.hpp"
#include "skewrs/finite_field.hpp"
#include "skewrs/rational_function_field.hpp"
#include "skewrs/cyclotomic_field.hpp"
#include "skewrs/matrix.hpp"
#include "skewrs/skew_poly.hpp"
#include "skewrs/code.hpp"
#include "skewrs/pgz_decoder.hpp"
#include "skewrs/config.hpp"
#include "skewrs/harness.hpp"
#include "skewrs/worked_examples.hpp"
