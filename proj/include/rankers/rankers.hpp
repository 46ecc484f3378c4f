#pragma once

#include "rankers/words.hpp"
#include "rankers/ranker.hpp"
#include "rankers/tl.hpp"
#include "rankers/itl.hpp"
#include "rankers/monomial.hpp"
#include "rankers/fo.hpp"
#include "rankers/syntax.hpp"
#include "rankers/transforms/simplify.hpp"
#include "rankers/transforms/ranker_language.hpp"
#include "rankers/transforms/ranker_formulas.hpp"
#include "rankers/transforms/relativize.hpp"
#include "rankers/transforms/monomial_itl.hpp"
#include "rankers/transforms/first_order.hpp"
#include "rankers/transforms/complement.hpp"
#include "rankers/transforms/lazy.hpp"
#include "rankers/oracle.hpp"
#include "rankers/enumerate.hpp"
