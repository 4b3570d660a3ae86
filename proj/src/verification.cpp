#include "isomin/verification.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "isomin/error.hpp"

namespace isomin {
namespace {

CounterexampleField field(std::string name, std::vector<Rational> v) {
  return {std::move(name), std::move(v), {}};
}

CounterexampleField field(std::string name, const Rational4& v) {
  return {std::move(name), std::vector<Rational>(v.begin(), v.end()), {}};
}

Counterexample failure(std::uint64_t trial, std::string reason, std::vector<CounterexampleField> inputs) {
  return {trial, std::move(reason), std::move(inputs)};
}

std::optional<Counterexample> trial_g2(const RngStream& s, std::uint64_t i, std::int64_t h) {
  auto [k, s1] = draw_int(s, 1, 3);
  auto [num, s2] = draw_int(s1, 1, h);
  auto [den, s3] = draw_int(s2, 1, h);
  const Rational S = make_rational(num, den);
  const auto branches = g2_solve(static_cast<int>(k), S);
  for (int b = 0; b < 2; ++b) {
    if (!g2_branch_satisfies(static_cast<int>(k), S, branches[b]))
      return failure(i, "branch " + std::to_string(b) + " violates the two-curvature system",
                     {field("k", std::vector<Rational>{Rational(static_cast<long>(k))}), field("S", std::vector<Rational>{S})});
  }
  return std::nullopt;
}

std::optional<Counterexample> trial_g3(const RngStream& s, std::uint64_t i, std::int64_t h) {
  static constexpr int kCompositions[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  auto [which, cur] = draw_int(s, 0, 2);
  std::array<Rational, 3> c;
  for (;;) {
    for (auto& v : c) {
      auto d = draw_rational(cur, h);
      v = d.value;
      cur = d.next;
    }
    if (c[0] != c[1] && c[0] != c[2] && c[1] != c[2]) break;
  }
  const int* m = kCompositions[which];
  const auto res = g3_kernel(m[0], m[1], m[2], c);
  if (res.kernel_dim != 0 || res.determinant != res.vandermonde_form) {
    return failure(i,
                   "kernel dimension " + std::to_string(res.kernel_dim) + ", det " + to_string(res.determinant) +
                       " vs " + to_string(res.vandermonde_form),
                   {field("pqr", std::vector<Rational>{Rational(m[0]), Rational(m[1]), Rational(m[2])}),
                    field("curvatures", std::vector<Rational>{c[0], c[1], c[2]})});
  }
  return std::nullopt;
}

std::optional<Counterexample> trial_vandermonde(const RngStream& s, std::uint64_t i, std::int64_t h) {
  auto [lam, s1] = draw_quadruple(s, h);
  auto [K, s2] = draw_rational4(s1, h);
  const DiagTable d = diag_from_K(lam, K);
  for (int l = 0; l < 4; ++l) {
    const Rational4 col = diag_from_system(lam, K[l], l);
    for (int r = 0; r < 4; ++r)
      if (col[r] != d[r][l])
        return failure(i, "column " + std::to_string(l + 1) + " differs from the closed formula",
                       {field("lambda", lam.values()), field("K", K)});
  }
  return std::nullopt;
}

std::optional<Counterexample> trial_i_closed(const RngStream& s, std::uint64_t i, std::int64_t h) {
  auto [lam, s1] = draw_quadruple(s, h);
  auto [K, s2] = draw_rational4(s1, h);
  const Rational4 closed = i_closed_form(lam, K);
  const Rational4 def = i_from_definition(lam, diag_from_K(lam, K));
  if (closed != def)
    return failure(i, "closed form differs from definition",
                   {field("lambda", lam.values()), field("K", K), field("I_closed", closed), field("I_def", def)});
  return std::nullopt;
}

std::optional<Counterexample> trial_i_sign(const RngStream& s, std::uint64_t i, std::int64_t h) {
  auto [lam, s1] = draw_quadruple(s, h);
  auto [K, s2] = draw_rational4(s1, h);
  const auto ok = i_nonpositive(lam, K);
  if (!(ok[0] && ok[1] && ok[2] && ok[3]))
    return failure(i, "some I_l is positive",
                   {field("lambda", lam.values()), field("K", K), field("I", i_closed_form(lam, K))});
  return std::nullopt;
}

std::optional<Counterexample> trial_dpsi(const RngStream& s, std::uint64_t i, std::int64_t h) {
  auto [lam, s1] = draw_quadruple(s, h);
  auto [K, s2] = draw_rational4(s1, h);
  auto [mixed, s3] = draw_rational4(s2, h);
  const DerivativeTable table(lam, K, mixed);
  const Rational lhs = dpsi_coefficient(table);
  const Rational4 I = i_closed_form(lam, K);
  const Rational rhs = gauss_R(lam) / 2 - (I[0] + I[1] + I[2] + I[3]);
  if (lhs != rhs)
    return failure(i, "d psi coefficient " + to_string(lhs) + " != R/2 - sum I = " + to_string(rhs),
                   {field("lambda", lam.values()), field("K", K), field("mixed", mixed)});
  return std::nullopt;
}

std::optional<Counterexample> trial_recover(const RngStream& s, std::uint64_t i) {
  constexpr double kMinGap = 1e-3;
  constexpr double kTol = 1e-9;
  RngStream cur = s;
  std::array<double, 4> lam;
  for (;;) {
    for (double& v : lam) {
      auto d = draw_uniform(cur, -3.0, 3.0);
      v = d.value;
      cur = d.next;
    }
    std::sort(lam.begin(), lam.end());
    if (lam[1] - lam[0] >= kMinGap && lam[2] - lam[1] >= kMinGap && lam[3] - lam[2] >= kMinGap) break;
  }
  Rational p1 = 0, p2 = 0, p3 = 0, e4 = 1;
  for (double v : lam) {
    const Rational q = exact_from_double(v);
    p1 += q;
    p2 += q * q;
    p3 += q * q * q;
    e4 *= q;
  }
  const auto rec = recover_curvatures(p1, p2, p3, e4);
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(rec.roots[k] - lam[k]));
  if (!(worst <= kTol)) {
    Counterexample c;
    c.trial = i;
    c.reason = "max root error " + std::to_string(worst);
    c.inputs.push_back({"lambda", {}, {lam.begin(), lam.end()}});
    c.inputs.push_back({"recovered", {}, {rec.roots.begin(), rec.roots.end()}});
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(IdentityName id) {
  switch (id) {
    case IdentityName::g2:
      return "g2";
    case IdentityName::g3:
      return "g3";
    case IdentityName::vandermonde:
      return "vandermonde";
    case IdentityName::i_closed:
      return "i-closed";
    case IdentityName::i_sign:
      return "i-sign";
    case IdentityName::dpsi:
      return "dpsi";
    case IdentityName::recover:
      return "recover";
  }
  return {};
}

const std::vector<IdentityName>& all_identities() {
  static const std::vector<IdentityName> ids{IdentityName::g2,       IdentityName::g3,     IdentityName::vandermonde,
                                             IdentityName::i_closed, IdentityName::i_sign, IdentityName::dpsi,
                                             IdentityName::recover};
  return ids;
}

std::optional<IdentityName> parse_identity(std::string_view s) {
  for (IdentityName id : all_identities())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

Draw<Rational4> draw_rational4(const RngStream& s, std::int64_t height) {
  Rational4 v;
  RngStream cur = s;
  for (auto& x : v) {
    auto d = draw_rational(cur, height);
    x = d.value;
    cur = d.next;
  }
  return {v, cur};
}

Draw<Quadruple> draw_quadruple(const RngStream& s, std::int64_t height) {
  RngStream cur = s;
  for (;;) {
    auto [v, next] = draw_rational4(cur, height);
    cur = next;
    std::sort(v.begin(), v.end());
    if (v[0] != v[1] && v[1] != v[2] && v[2] != v[3]) return {Quadruple(v), cur};
  }
}

IdentityVerdict run_sweep(std::string name, bool exact, const SweepParams& params, const TrialFn& trial) {
  if (params.trials < 1) throw InvalidArgument("sweep needs at least one trial");
  if (params.height < 1) throw InvalidArgument("rational height must be >= 1");
  if (params.workers < 1) throw InvalidArgument("sweep needs at least one worker");

  struct Partial {
    std::int64_t failures = 0;
    std::optional<Counterexample> first;
  };
  const RngStream root(params.seed);
  auto work = [&](std::int64_t begin, std::int64_t end, Partial& out) {
    for (std::int64_t t = begin; t < end; ++t) {
      const auto idx = static_cast<std::uint64_t>(t);
      std::optional<Counterexample> c;
      try {
        c = trial(root.split(idx), idx);
      } catch (const std::exception& e) {
        c = Counterexample{idx, std::string("exception: ") + e.what(), {}};
      }
      if (c) {
        ++out.failures;
        if (!out.first) out.first = std::move(c);
      }
    }
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(params.workers, params.trials));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    work(0, params.trials, parts[0]);
  } else {
    const std::int64_t chunk = (params.trials + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t b = w * chunk, e = std::min(params.trials, b + chunk);
      if (b < e) pool.emplace_back(work, b, e, std::ref(parts[w]));
    }
  }

  IdentityVerdict v;
  v.identity_name = std::move(name);
  v.trials = params.trials;
  v.exact = exact;
  for (auto& p : parts) {  // blocks are in trial order
    v.failures += p.failures;
    if (!v.first_counterexample && p.first) v.first_counterexample = std::move(p.first);
  }
  return v;
}

IdentityVerdict verify_identity(IdentityName id, const SweepParams& params) {
  const std::int64_t h = params.height;
  TrialFn fn;
  switch (id) {
    case IdentityName::g2:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_g2(s, i, h); };
      break;
    case IdentityName::g3:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_g3(s, i, h); };
      break;
    case IdentityName::vandermonde:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_vandermonde(s, i, h); };
      break;
    case IdentityName::i_closed:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_i_closed(s, i, h); };
      break;
    case IdentityName::i_sign:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_i_sign(s, i, h); };
      break;
    case IdentityName::dpsi:
      fn = [h](const RngStream& s, std::uint64_t i) { return trial_dpsi(s, i, h); };
      break;
    case IdentityName::recover:
      fn = [](const RngStream& s, std::uint64_t i) { return trial_recover(s, i); };
      break;
  }
  return run_sweep(to_string(id), id != IdentityName::recover, params, fn);
}

}  // namespace isomin
