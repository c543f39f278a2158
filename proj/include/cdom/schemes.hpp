#ifndef CDOM_SCHEMES_HPP
#define CDOM_SCHEMES_HPP

#include <cstdint>

#include "cdom/perm.hpp"

namespace cdom {

/// Fishburn's alternating scheme. Variant A imposes bN1 on every triple
/// a<b<c with b even and bN3 with b odd (alternatives 1-based); B swaps the
/// two.
enum class AlternatingVariant { A, B };

Domain alternating(int n, AlternatingVariant variant = AlternatingVariant::A);

/// Closed-form size of the alternating scheme (Galambos and Reiner).
std::uint64_t alternating_size(int n);

/// Substitutes the orders of `inner` for the last alternative of `outer`.
/// outer has degree k+1 and inner degree l; the result has degree k+l with
/// inner's alternatives shifted to k+1..k+l and |outer|*|inner| orders.
Domain replacement(const Domain& outer, const Domain& inner);

/// Orders single-peaked on the axis 1<2<...<n: every prefix is an interval.
Domain black_single_peaked(int n);

}  // namespace cdom

#endif  // CDOM_SCHEMES_HPP
