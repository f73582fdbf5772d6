#include "sympdec/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>

#include "sympdec/classical_groups.hpp"
#include "sympdec/error.hpp"
#include "sympdec/induced_maps.hpp"
#include "sympdec/lifting.hpp"
#include "sympdec/random.hpp"

namespace sympdec::verify {

namespace g = sympdec::groups;
namespace ind = sympdec::induced;

namespace {

using Params = std::vector<std::pair<std::string, long>>;

struct Defaults {
  long samples;
  long max_m;
  long max_n;
  long max_r;
};

Defaults defaults_for(Suite s) {
  switch (s) {
    case Suite::Closure: return {100, 2, 2, 3};
    case Suite::Lemmas: return {25, 2, 3, 1};
    case Suite::MixedProduct: return {25, 2, 3, 1};
    case Suite::Center: return {25, 2, 3, 1};
    case Suite::Formulas: return {0, 5, 5, 1};
    case Suite::Bezout: return {0, 10, 99, 1};
    case Suite::JIso: return {0, 4, 19, 1};
    case Suite::All: break;
  }
  return {0, 1, 1, 1};
}

bool is_matrix_suite(Suite s) {
  return s == Suite::Closure || s == Suite::Lemmas || s == Suite::MixedProduct ||
         s == Suite::Center;
}

// Collects cases and failures for one suite.
class Recorder {
 public:
  Recorder(Suite suite, const VerifyConfig& cfg) : suite_(suite), cfg_(cfg) {
    const Defaults d = defaults_for(suite);
    report_.suite = to_string(suite);
    report_.seed = cfg.seed;
    report_.samples = d.samples == 0 ? 0 : cfg.samples.value_or(d.samples);
    report_.max_m = cfg.max_m.value_or(d.max_m);
    report_.max_n = cfg.max_n.value_or(d.max_n);
    report_.max_r = cfg.max_r.value_or(d.max_r);
    if (d.samples != 0 && report_.samples < 1) {
      fail(ErrorKind::InvalidArgument, "samples must be >= 1");
    }
    if (report_.max_m < 1 || report_.max_n < 1 || report_.max_r < 1) {
      fail(ErrorKind::InvalidArgument, "bounds must be >= 1");
    }
    if (is_matrix_suite(suite)) {
      const long side = std::max(2 * report_.max_m * report_.max_n * report_.max_r,
                                 4 * report_.max_m * report_.max_n);
      if (side > kMatrixGuard) {
        fail(ErrorKind::BoundsTooLarge, report_.suite + ": matrices up to " + std::to_string(side) +
                                            "x" + std::to_string(side) + " exceed the " +
                                            std::to_string(kMatrixGuard) + "x" +
                                            std::to_string(kMatrixGuard) + " guard");
      }
    }
    if (cfg.timing) start_ = std::chrono::steady_clock::now();
  }

  long samples() const { return report_.samples; }
  long max_m() const { return report_.max_m; }
  long max_n() const { return report_.max_n; }
  long max_r() const { return report_.max_r; }

  /// Sample indices to run, honouring --only-sample.
  std::vector<long> sample_indices() const {
    if (cfg_.only_sample) {
      if (*cfg_.only_sample < 0 || *cfg_.only_sample >= report_.samples) return {};
      return {*cfg_.only_sample};
    }
    std::vector<long> out(static_cast<std::size_t>(report_.samples));
    std::iota(out.begin(), out.end(), 0L);
    return out;
  }

  std::uint64_t sample_seed(std::uint64_t case_id, long k) const {
    return derive_seed(derive_seed(cfg_.seed, case_id), static_cast<std::uint64_t>(k));
  }

  /// Runs one check; exceptions count as failures.
  void check(const std::string& name, const Params& params, std::optional<long> sample,
             std::optional<std::uint64_t> seed, const std::function<bool()>& body) {
    ++report_.cases;
    std::string message;
    bool ok = false;
    try {
      ok = body();
      if (!ok) message = "check returned false";
    } catch (const std::exception& e) {
      message = e.what();
    }
    if (!ok) report_.failures.push_back({name, params, sample, seed, message});
  }

  VerifyReport finish() {
    if (cfg_.timing) {
      report_.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
              .count();
    }
    return std::move(report_);
  }

 private:
  Suite suite_;
  const VerifyConfig& cfg_;
  VerifyReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t sz(long v) { return static_cast<std::size_t>(v); }

bool same_hom(const ind::AbHom& a, const ind::AbHom& b) {
  return a.matrix == b.matrix && a.source() == b.source() && a.target() == b.target();
}

bool out_of_range(const std::function<void()>& f) {
  try {
    f();
    return false;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutOfRange) return true;
    throw;
  }
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Closure: return "closure";
    case Suite::Lemmas: return "lemmas";
    case Suite::MixedProduct: return "mixed-product";
    case Suite::Center: return "center";
    case Suite::Formulas: return "formulas";
    case Suite::Bezout: return "bezout";
    case Suite::JIso: return "J-iso";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Closure, Suite::Lemmas, Suite::MixedProduct, Suite::Center,
                  Suite::Formulas, Suite::Bezout, Suite::JIso, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  if (name == "j-iso") return Suite::JIso;
  return std::nullopt;
}

VerifyReport run_closure(const VerifyConfig& cfg) {
  Recorder rec(Suite::Closure, cfg);
  for (const long k : rec.sample_indices()) {
    const std::uint64_t seed = rec.sample_seed(0, k);
    Rng rng(seed);
    const long m = rng.uniform(1, rec.max_m());
    const long n = rng.uniform(1, rec.max_n());
    const long r = rng.uniform(1, rec.max_r());
    const long j = rng.uniform(1, r);
    const Params p = {{"m", m}, {"n", n}, {"r", r}, {"j", j}};
    const ExactMatrix a = g::random_sp(sz(m), rng);
    const ExactMatrix b = g::random_sp(sz(n), rng);
    const ExactMatrix o = g::random_o(sz(n), rng);
    const ExactMatrix so = g::random_so(sz(n), rng);
    const ExactMatrix bad = g::perturb_entry(a, rng);

    rec.check("random_sp", p, k, seed, [&] { return g::is_symplectic(a) && g::is_symplectic(b); });
    rec.check("random_so", p, k, seed, [&] { return g::is_special_orthogonal(so); });
    rec.check("random_o", p, k, seed, [&] { return g::is_orthogonal(o); });
    rec.check("direct_sum_sp", p, k, seed,
              [&] { return g::is_symplectic(g::direct_sum_sp(a, b)); });
    rec.check("r_fold_sum_sp", p, k, seed,
              [&] { return g::is_symplectic(g::r_fold_sum_sp(b, sz(r))); });
    rec.check("stabilization_sj", p, k, seed,
              [&] { return g::is_symplectic(g::stabilization_sj(b, sz(j), sz(r))); });
    rec.check("doubling", p, k, seed, [&] { return g::is_symplectic(g::doubling(o)); });
    rec.check("tensor_sp_o", p, k, seed, [&] { return g::is_symplectic(g::tensor_sp_o(a, o)); });
    rec.check("tensor_sp_sp", p, k, seed, [&] { return g::is_orthogonal(g::tensor_sp_sp(a, b)); });
    rec.check("gram_blocks_biconditional", p, k, seed, [&] {
      const auto member = g::symplectic_checks(a);
      const auto other = g::symplectic_checks(bad);
      return member.gram && member.blocks && other.gram == other.blocks;
    });
  }
  return rec.finish();
}

VerifyReport run_lemmas(const VerifyConfig& cfg) {
  Recorder rec(Suite::Lemmas, cfg);
  const long bound = rec.max_m() * rec.max_n();
  const auto samples = rec.sample_indices();
  for (long n = 1; n <= bound; ++n) {
    for (long r = 2; r * n <= bound; ++r) {
      for (long j = 1; j < r; ++j) {
        const std::uint64_t id = 1000000 + static_cast<std::uint64_t>(n * 10000 + r * 100 + j);
        const Params p = {{"n", n}, {"r", r}, {"j", j}};
        for (const long k : samples) {
          const std::uint64_t seed = rec.sample_seed(id, k);
          rec.check("sj_conjugation", p, k, seed, [&] {
            Rng rng(seed);
            return g::verify_sj_conjugation(g::random_sp(sz(n), rng), sz(j), sz(r));
          });
        }
      }
    }
  }
  for (long m = 1; m <= bound; ++m) {
    for (long n = 1; m * n <= bound; ++n) {
      const std::uint64_t id = 2000000 + static_cast<std::uint64_t>(m * 10000 + n * 100);
      const Params p = {{"m", m}, {"n", n}};
      for (const long k : samples) {
        const std::uint64_t seed = rec.sample_seed(id, k);
        rec.check("L_conjugation", p, k, seed, [&] {
          Rng rng(seed);
          return g::verify_L_conjugation(g::random_sp(sz(m), rng), sz(n));
        });
      }
    }
  }
  return rec.finish();
}

VerifyReport run_mixed_product(const VerifyConfig& cfg) {
  Recorder rec(Suite::MixedProduct, cfg);
  for (const long k : rec.sample_indices()) {
    const std::uint64_t seed = rec.sample_seed(3, k);
    Rng rng(seed);
    const long p_size = rng.uniform(1, 2 * rec.max_m());
    const long q_size = rng.uniform(1, rec.max_n());
    const long m = rng.uniform(1, rec.max_m());
    const long n = rng.uniform(1, rec.max_n());
    const Params p = {{"p", p_size}, {"q", q_size}, {"m", m}, {"n", n}};
    const ExactMatrix x = g::random_square(sz(p_size), rng);
    const ExactMatrix y = g::random_square(sz(q_size), rng);
    const ExactMatrix a = g::random_sp(sz(m), rng);
    const ExactMatrix b = g::random_o(sz(n), rng);
    rec.check("mixed_product", p, k, seed, [&] { return g::verify_mixed_product(x, y); });
    rec.check("tensor_left_part", p, k, seed, [&] {
      return g::tensor_sp_o(a, ExactMatrix::identity(sz(n))) == g::left_tensor(a, sz(n));
    });
    rec.check("tensor_right_part", p, k, seed, [&] {
      return g::tensor_sp_o(ExactMatrix::identity(sz(2 * m)), b) == g::right_tensor(sz(m), b);
    });
    rec.check("tensor_factorization", p, k, seed, [&] {
      return g::left_tensor(a, sz(n)) * g::right_tensor(sz(m), b) == g::tensor_sp_o(a, b);
    });
  }
  return rec.finish();
}

VerifyReport run_center(const VerifyConfig& cfg) {
  Recorder rec(Suite::Center, cfg);
  for (long m = 1; m <= rec.max_m(); ++m) {
    for (long n = 1; n <= rec.max_n(); ++n) {
      rec.check("center_to_center", {{"m", m}, {"n", n}}, std::nullopt, std::nullopt, [&] {
        return g::tensor_sp_o(-ExactMatrix::identity(sz(2 * m)), ExactMatrix::identity(sz(n))) ==
               -ExactMatrix::identity(sz(2 * m * n));
      });
    }
  }
  for (const long k : rec.sample_indices()) {
    const std::uint64_t seed = rec.sample_seed(4, k);
    Rng rng(seed);
    const long m = rng.uniform(1, rec.max_m());
    const long n = rng.uniform(1, rec.max_n());
    const ExactMatrix a = g::random_sp(sz(m), rng);
    const ExactMatrix b = g::random_o(sz(n), rng);
    rec.check("center_commutes", {{"m", m}, {"n", n}}, k, seed, [&] {
      return g::tensor_sp_o(-a, b) == -g::tensor_sp_o(a, b) &&
             g::tensor_sp_o(a, -b) == -g::tensor_sp_o(a, b);
    });
  }
  return rec.finish();
}

VerifyReport run_formulas(const VerifyConfig& cfg) {
  Recorder rec(Suite::Formulas, cfg);
  for (long m = 1; m <= rec.max_m(); ++m) {
    for (long n = 1; n <= rec.max_n(); ++n) {
      const long top = std::max(4 * m + 2, n);
      for (long i = 0; i <= top; ++i) {
        const Params p = {{"i", i}, {"m", m}, {"n", n}};
        if (out_of_range([&] { ind::hom_tensor_sp_o(i, m, n); })) continue;
        rec.check("tensor_sp_o_is_L_plus_R", p, std::nullopt, std::nullopt, [&] {
          const auto whole = ind::hom_tensor_sp_o(i, m, n);
          const auto left = ind::hom_r_fold(i, m, n);
          const auto right = ind::compose(ind::hom_r_fold(i, n, m), ind::hom_doubling(i, n));
          const auto sum = ind::sum_on_product(left, right);
          return ind::is_well_defined(whole) && ind::is_well_defined(sum) && same_hom(whole, sum);
        });
        if (n % 2 == 1 && i >= 2) {
          rec.check("tensor_quotient_matches_tensor", p, std::nullopt, std::nullopt, [&] {
            return same_hom(ind::hom_tensor_quotient(i, m, n), ind::hom_tensor_sp_o(i, m, n));
          });
        }
      }
    }
  }
  for (long m = 1; m <= rec.max_m(); ++m) {
    for (long i = 0; i < 4 * m + 2; ++i) {
      if (out_of_range([&] { ind::hom_square_tensor(i, m); })) continue;
      rec.check("square_tensor_is_diagonal_composite", {{"i", i}, {"m", m}}, std::nullopt,
                std::nullopt, [&] {
                  const auto sq = ind::hom_square_tensor(i, m);
                  const auto both = ind::hom_tensor_sp_sp(i, m, m);
                  const auto diag = ind::compose(both, ind::diagonal(both.source_parts.at(0)));
                  return ind::is_well_defined(sq) && same_hom(sq, diag);
                });
    }
  }
  for (long m = 1; m <= rec.max_m(); ++m) {
    for (long n = m; n <= rec.max_n(); ++n) {
      for (long i = 0; i < 4 * m + 2; ++i) {
        if (out_of_range([&] { ind::hom_tensor_sp_sp(i, m, n); })) continue;
        rec.check("tensor_sp_sp_well_defined", {{"i", i}, {"m", m}, {"n", n}}, std::nullopt,
                  std::nullopt, [&] { return ind::is_well_defined(ind::hom_tensor_sp_sp(i, m, n)); });
      }
    }
  }
  return rec.finish();
}

VerifyReport run_bezout(const VerifyConfig& cfg) {
  Recorder rec(Suite::Bezout, cfg);
  for (long m = 1; m <= rec.max_m(); ++m) {
    for (long n = 1; n <= rec.max_n(); ++n) {
      const Params p = {{"m", m}, {"n", n}};
      if (n % 2 == 0 || std::gcd(m, n) != 1) {
        rec.check("bezout_rejects", p, std::nullopt, std::nullopt, [&] {
          try {
            lifting::bezout_uv(m, n);
          } catch (const Error& e) {
            return e.kind() == (n % 2 == 0 ? ErrorKind::EvenN : ErrorKind::NotCoprime);
          }
          return false;
        });
        continue;
      }
      rec.check("bezout_witness", p, std::nullopt, std::nullopt, [&] {
        const auto w = lifting::bezout_uv(m, n);
        const long lhs = w.v * n - 4 * w.u * m * m;
        if (w.u <= 0 || w.v <= 0 || (lhs != 1 && lhs != -1) || lhs != w.sign) return false;
        if (w.N != 4 * w.u * m * m + w.v * n) return false;
        for (long u = 1; u < w.u; ++u) {
          const long t = 4 * u * m * m;
          if ((t + 1) % n == 0 || (t - 1) % n == 0) return false;
        }
        return true;
      });
    }
  }
  return rec.finish();
}

VerifyReport run_j_iso(const VerifyConfig& cfg) {
  Recorder rec(Suite::JIso, cfg);
  for (long m = 2; m <= rec.max_m(); ++m) {
    for (long n = 9; n <= rec.max_n(); n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const auto w = lifting::bezout_uv(m, n);
      const long d = std::min(4 * m + 3, n);
      for (long i = 1; i < d; ++i) {
        if (i % 8 == 0) continue;
        for (const int z : {0, 1}) {
          rec.check("J_isomorphism", {{"i", i}, {"m", m}, {"n", n}, {"z", z}}, std::nullopt,
                    std::nullopt, [&] {
                      const auto h = ind::hom_J(i, m, n, w.u, w.v, z);
                      if (!ind::is_isomorphism(h)) return false;
                      if (i % 8 == 4) {
                        return h.matrix.rows() == 2 && determinant(h.matrix) == w.sign;
                      }
                      return true;
                    });
        }
      }
      rec.check("J_connectivity", {{"m", m}, {"n", n}}, std::nullopt, std::nullopt,
                [&] { return lifting::connectivity_J(m, n) == 7; });
    }
  }
  return rec.finish();
}

std::vector<VerifyReport> run(const VerifyConfig& cfg) {
  const auto one = [&](Suite s) {
    switch (s) {
      case Suite::Closure: return run_closure(cfg);
      case Suite::Lemmas: return run_lemmas(cfg);
      case Suite::MixedProduct: return run_mixed_product(cfg);
      case Suite::Center: return run_center(cfg);
      case Suite::Formulas: return run_formulas(cfg);
      case Suite::Bezout: return run_bezout(cfg);
      case Suite::JIso: return run_j_iso(cfg);
      case Suite::All: break;
    }
    throw std::logic_error("unreachable suite");
  };
  if (cfg.suite != Suite::All) return {one(cfg.suite)};
  std::vector<VerifyReport> out;
  for (Suite s : {Suite::Closure, Suite::Lemmas, Suite::MixedProduct, Suite::Center,
                  Suite::Formulas, Suite::Bezout, Suite::JIso}) {
    out.push_back(one(s));
  }
  return out;
}

}  // namespace sympdec::verify
