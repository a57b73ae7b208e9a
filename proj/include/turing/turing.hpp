#ifndef TURING_TURING_HPP
#define TURING_TURING_HPP

#include "turing/coefficients.hpp"
#include "turing/errors.hpp"
#include "turing/eval_result.hpp"
#include "turing/optimizer.hpp"
#include "turing/report.hpp"
#include "turing/strip_bounds.hpp"
#include "turing/table.hpp"
#include "turing/version.hpp"
#include "turing/zeta.hpp"

#endif  // TURING_TURING_HPP
