#pragma once

#include "opalg/catalog.hpp"
#include "opalg/context.hpp"
#include "opalg/enumerate.hpp"
#include "opalg/error.hpp"
#include "opalg/gsbasis.hpp"
#include "opalg/mixed_word.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/rational.hpp"
#include "opalg/rewrite.hpp"
#include "opalg/symbol.hpp"
#include "opalg/type_check.hpp"
#include "opalg/word.hpp"
