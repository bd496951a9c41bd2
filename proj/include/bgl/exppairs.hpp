#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bgl/errors.hpp"

namespace bgl {

// An exponent pair (kappa, lambda) in exact rationals, with the A/B word
// that produced it from its seed. All generated pairs satisfy
// 0 <= kappa <= 1/2 <= lambda <= 1.
struct ExponentPair {
  mpq_class kappa;
  mpq_class lambda;
  std::string word;
};

// The seed pair (0, 1) with the empty word.
ExponentPair trivial_pair();
// The classical pair (1/2, 1/2) = B(0, 1).
ExponentPair classical_pair();

bool pair_in_range(const ExponentPair& p);

// A-process: (kappa, lambda) -> (kappa/(2 kappa + 2), (kappa + lambda + 1)/(2 kappa + 2)).
ExponentPair a_process(const ExponentPair& p);

// B-process: (kappa, lambda) -> (lambda - 1/2, kappa + 1/2). An involution on
// the admissible range; DomainError if the result leaves it.
ExponentPair b_process(const ExponentPair& p);

// Upper end of the admissible c-interval: 1 + (1 - lambda)/(2 kappa - lambda + 3).
mpq_class c_range(const ExponentPair& p);

// The target exponent 1/(4 (2 - c) sqrt(e)) for c in (1, 2); DomainError outside.
double ps_exponent(const mpq_class& c);

// Three-term bilinear bound evaluated with (kappa0, lambda0) = a_process(p):
//   (h^k0 L^(k0/c + l0) M^(1 - k0 + k0/c) + h^(-1/2) (LM)^(1 - 1/(2c)) + L M^(1/2)) log L.
// Diagnostic only; no implied constant.
double lemma2_bound(const ExponentPair& p, std::uint64_t h, double L, double M,
                    const mpq_class& c);

struct PairSearchResult {
  ExponentPair best;
  mpq_class best_c;
  std::size_t distinct_pairs = 0;
};

// Exhaustive A/B-word search up to `depth` letters over the seeds
// (default {(0,1)}), deduplicating pairs exactly. Returns the pair with the
// largest c_range; ties prefer the shorter, then lexicographically smaller
// word. Monotone nondecreasing in depth.
PairSearchResult search_best_c(unsigned depth,
                               std::vector<ExponentPair> seeds = {});

// "k_num/k_den,l_num/l_den" plus the word after a space (omitted when empty).
std::string pair_to_string(const ExponentPair& p);
ExponentPair pair_from_string(const std::string& text);

}  // namespace bgl
