#include "bgl/exppairs.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace bgl {

ExponentPair trivial_pair() { return {mpq_class(0), mpq_class(1), ""}; }

ExponentPair classical_pair() {
  return {mpq_class(1, 2), mpq_class(1, 2), "B"};
}

bool pair_in_range(const ExponentPair& p) {
  static const mpq_class half(1, 2);
  return p.kappa >= 0 && p.kappa <= half && p.lambda >= half && p.lambda <= 1;
}

ExponentPair a_process(const ExponentPair& p) {
  mpq_class den = 2 * p.kappa + 2;
  ExponentPair out;
  out.kappa = p.kappa / den;
  out.lambda = (p.kappa + p.lambda + 1) / den;
  out.kappa.canonicalize();
  out.lambda.canonicalize();
  out.word = p.word + "A";
  return out;
}

ExponentPair b_process(const ExponentPair& p) {
  static const mpq_class half(1, 2);
  ExponentPair out;
  out.kappa = p.lambda - half;
  out.lambda = p.kappa + half;
  out.kappa.canonicalize();
  out.lambda.canonicalize();
  out.word = p.word + "B";
  if (!pair_in_range(out)) {
    throw DomainError("b_process: result (" + out.kappa.get_str() + "," +
                      out.lambda.get_str() + ") leaves the admissible range");
  }
  return out;
}

mpq_class c_range(const ExponentPair& p) {
  mpq_class den = 2 * p.kappa - p.lambda + 3;
  if (den <= 0) throw DomainError("c_range: nonpositive denominator");
  mpq_class c = 1 + (1 - p.lambda) / den;
  c.canonicalize();
  return c;
}

double ps_exponent(const mpq_class& c) {
  if (c <= 1 || c >= 2) {
    throw DomainError("ps_exponent: c must satisfy 1 < c < 2, got " +
                      c.get_str());
  }
  double cd = c.get_d();
  return 1.0 / (4.0 * (2.0 - cd) * std::sqrt(std::exp(1.0)));
}

double lemma2_bound(const ExponentPair& p, std::uint64_t h, double L, double M,
                    const mpq_class& c) {
  ExponentPair derived = a_process(p);
  const double k0 = derived.kappa.get_d();
  const double l0 = derived.lambda.get_d();
  const double cd = c.get_d();
  const double hd = static_cast<double>(h);
  const double t1 = std::pow(hd, k0) * std::pow(L, k0 / cd + l0) *
                    std::pow(M, 1.0 - k0 + k0 / cd);
  const double t2 = std::pow(hd, -0.5) * std::pow(L * M, 1.0 - 1.0 / (2.0 * cd));
  const double t3 = L * std::sqrt(M);
  return (t1 + t2 + t3) * std::log(L);
}

PairSearchResult search_best_c(unsigned depth, std::vector<ExponentPair> seeds) {
  if (depth > 30) throw DomainError("search_best_c: depth capped at 30");
  if (seeds.empty()) seeds.push_back(trivial_pair());

  using Key = std::pair<mpq_class, mpq_class>;
  std::map<Key, ExponentPair> seen;
  std::vector<ExponentPair> frontier;
  for (const auto& s : seeds) {
    if (!pair_in_range(s)) {
      throw DomainError("search_best_c: seed out of range");
    }
    Key k{s.kappa, s.lambda};
    if (seen.emplace(k, s).second) frontier.push_back(s);
  }

  // Seeds arrive in caller order; levels are explored shortest-word-first and
  // within a level in lexicographic word order, so the first time a pair is
  // seen its stored word is the tie-break winner.
  for (unsigned d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<ExponentPair> next;
    next.reserve(frontier.size() * 2);
    for (const auto& pr : frontier) {
      ExponentPair children[2];
      int n = 0;
      children[n++] = a_process(pr);
      try {
        children[n++] = b_process(pr);
      } catch (const DomainError&) {
        // pruned
      }
      for (int i = 0; i < n; ++i) {
        if (!pair_in_range(children[i])) continue;
        Key k{children[i].kappa, children[i].lambda};
        if (seen.emplace(k, children[i]).second) next.push_back(children[i]);
      }
    }
    frontier = std::move(next);
  }

  PairSearchResult res;
  bool first = true;
  for (const auto& [key, pr] : seen) {
    mpq_class c = c_range(pr);
    bool better = false;
    if (first) {
      better = true;
    } else if (c != res.best_c) {
      better = c > res.best_c;
    } else if (pr.word.size() != res.best.word.size()) {
      better = pr.word.size() < res.best.word.size();
    } else {
      better = pr.word < res.best.word;
    }
    if (better) {
      res.best = pr;
      res.best_c = c;
      first = false;
    }
  }
  res.distinct_pairs = seen.size();
  return res;
}

std::string pair_to_string(const ExponentPair& p) {
  std::string s = p.kappa.get_num().get_str() + "/" +
                  p.kappa.get_den().get_str() + "," +
                  p.lambda.get_num().get_str() + "/" +
                  p.lambda.get_den().get_str();
  if (!p.word.empty()) s += " " + p.word;
  return s;
}

ExponentPair pair_from_string(const std::string& text) {
  auto sp = text.find(' ');
  std::string frac = text.substr(0, sp);
  std::string word = sp == std::string::npos ? "" : text.substr(sp + 1);
  auto comma = frac.find(',');
  if (comma == std::string::npos) {
    throw DomainError("pair_from_string: expected 'k_num/k_den,l_num/l_den'");
  }
  auto parse_q = [](const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
      throw DomainError("pair_from_string: bad rational '" + s + "'");
    }
    q.canonicalize();
    return q;
  };
  ExponentPair out;
  out.kappa = parse_q(frac.substr(0, comma));
  out.lambda = parse_q(frac.substr(comma + 1));
  out.word = word;
  if (!pair_in_range(out)) {
    throw DomainError("pair_from_string: pair out of admissible range");
  }
  return out;
}

}  // namespace bgl
