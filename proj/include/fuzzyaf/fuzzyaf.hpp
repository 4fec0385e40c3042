#ifndef FUZZYAF_FUZZYAF_HPP
#define FUZZYAF_FUZZYAF_HPP

#include "fuzzyaf/attacks.hpp"
#include "fuzzyaf/degree.hpp"
#include "fuzzyaf/format.hpp"
#include "fuzzyaf/framework.hpp"
#include "fuzzyaf/generators.hpp"
#include "fuzzyaf/recursive.hpp"
#include "fuzzyaf/report.hpp"
#include "fuzzyaf/scc.hpp"
#include "fuzzyaf/semantics.hpp"

#endif  // FUZZYAF_FUZZYAF_HPP
