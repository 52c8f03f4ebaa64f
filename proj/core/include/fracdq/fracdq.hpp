#ifndef FRACDQ_FRACDQ_HPP
#define FRACDQ_FRACDQ_HPP

#include "fracdq/bench.hpp"
#include "fracdq/densela.hpp"
#include "fracdq/dqweights.hpp"
#include "fracdq/error.hpp"
#include "fracdq/fracops.hpp"
#include "fracdq/kernels.hpp"
#include "fracdq/quadrature.hpp"
#include "fracdq/solver.hpp"

#endif  // FRACDQ_FRACDQ_HPP
