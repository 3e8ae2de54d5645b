#pragma once

#include <optional>
#include <stdexcept>

#include "solver/bitangent.hpp"

namespace btg::qtype {

using geom::ProjLine;
using num::Rat;
using solver::Bitangent;
using solver::BitangentSet;

// Element of GW(R) written as n_plus <1> + n_minus <-1>.
struct GWClass {
  int n_plus = 0;
  int n_minus = 0;
  int rank() const { return n_plus + n_minus; }
  int signature() const { return n_plus - n_minus; }
  GWClass& operator+=(const GWClass& o) {
    n_plus += o.n_plus;
    n_minus += o.n_minus;
    return *this;
  }
  friend bool operator==(const GWClass& a, const GWClass& b) {
    return a.n_plus == b.n_plus && a.n_minus == b.n_minus;
  }
  static GWClass plus_one() { return {1, 0}; }
  static GWClass minus_one() { return {0, 1}; }
  static GWClass hyperbolic() { return {1, 1}; }
};

struct ZMeetsInfinity : std::domain_error {
  explicit ZMeetsInfinity(const std::string& what) : std::domain_error(what) {}
};

// Sign (+1/-1) of the type of one real bitangent relative to linf (a line in
// the original coordinates). Throws ZMeetsInfinity when a tangency point of
// this bitangent lies on linf, std::invalid_argument when bt is linf itself.
int qtype_sign(const BitangentSet& set, const Bitangent& bt,
               const ProjLine& linf);
GWClass qtype(const BitangentSet& set, const Bitangent& bt,
              const ProjLine& linf);

// Certifies that no tangency point of any bitangent (real or complex) lies
// on linf; with `exclude`, the line itself is expected to be the bitangent
// with that rational chart value a and is exempted.
void check_tangency_hypothesis(const BitangentSet& set, const ProjLine& linf,
                               const std::optional<Rat>& exclude_a = {});

// Sum of qtype signs over the real bitangents.
int signed_count(const BitangentSet& set, const ProjLine& linf);

// Full GW(R) trace: real bitangents contribute their type, each complex
// conjugate pair contributes <1> + <-1>. Rank is always 28.
GWClass gw_report(const BitangentSet& set, const ProjLine& linf);

// Same, over the 27 bitangents other than linf (which must be a bitangent of
// the set, identified by its rational chart value).
GWClass gw_report_excluding(const BitangentSet& set, const ProjLine& linf,
                            const Rat& exclude_a);

// Locates linf among the real bitangents of the set; returns its chart value
// a (exact rational) if it is one, nullopt otherwise.
std::optional<Rat> find_bitangent_chart_value(const BitangentSet& set,
                                              const ProjLine& linf);

}  // namespace btg::qtype
