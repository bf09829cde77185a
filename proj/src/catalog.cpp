#include "congsweep/catalog.hpp"

#include <unordered_map>

#include "congsweep/quadring.hpp"

namespace congsweep {

std::string ResidueClass::to_string() const {
  if (modulus == 2 && residues.size() == 1 && residues[0] == 1) return "all odd p";
  std::string s = "p = ";
  for (size_t i = 0; i < residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(residues[i]);
  }
  s += " (mod " + std::to_string(modulus) + ")";
  return s;
}

namespace {

enum CheckId : int {
  kRvMortenson = 0,
  kThm1i, kThm1ii, kThm1iii, kThm1iv,
  kThm2v, kThm2u,
  kThm1nI, kThm1nII, kThm1nIII,
  kThm3Poly, kLem21Poly, kLem22Poly,
  kLem31i, kLem31ii, kLem31iii,
  kLem32i, kLem32ii, kLem32iii,
  kLem41i, kLem41ii, kLem41iii,
  kMorley, kLehmer, kWolstenholmeH, kTailDiv, kHp1j,
  kSymZeroI, kSymZeroII, kSymZeroIII,
};

const ResidueClass kAllOdd{2, {1}};

std::vector<CheckDescriptor> build_registry() {
  std::vector<CheckDescriptor> r;
  auto add = [&r](std::string id, ResidueClass cls, int power, bool parametric,
                  std::string stmt) {
    r.push_back({std::move(id), std::move(cls), power, parametric, std::move(stmt)});
  };
  add("rv_mortenson", kAllOdd, 2, false,
      "sum_{k<p} binom(2k,k)^2/16^k = (-1|p) (mod p^2)");
  add("thm1_i", {4, {3}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2/(-8)^k = 0 (mod p^2)");
  add("thm1_ii", {12, {1}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2 chi3(k)/16^k = 0 (mod p^2)");
  add("thm1_iii", {8, {7}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2 P_k/8^k = 0 (mod p^2)");
  add("thm1_iv", {12, {11}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2 R_k/(-4)^k = 0 (mod p^2)");
  add("thm2_v", kAllOdd, 2, true,
      "sum_{k<=(p-1)/2} binom(p-1,k) binom(2k,k)^2 V_k(a,b)/16^k = "
      "(-1)^{(p-1)/2} 16^{p-1} sum_j binom((p-1)/2,j)^2 V_j(a+2,a+b+1)(1+2pH_{2j}) (mod p^2)");
  add("thm2_u", kAllOdd, 2, true,
      "same shape with U; needs p^2 not dividing a^2-4b");
  add("thm1n_i", {8, {7}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2 W_k/4^k = 0 (mod p^2)");
  add("thm1n_ii", {6, {1}}, 2, false,
      "sum_{k<p} binom(p-1,k) binom(2k,k)^2 (-1)^k M_k/16^k = 0 (mod p^2)");
  add("thm1n_iii", {12, {7}}, 2, false,
      "sum over k = 0 (mod 3) of binom(p-1,k) binom(2k,k)^2/16^k equals "
      "one third of the full sum (mod p^2)");
  add("thm3_poly", kAllOdd, 2, false,
      "coefficient-wise: sum_k binom(p-1,k) binom(2k,k)^2 (z-1)^k/16^k = "
      "(-1)^{(p-1)/2} 16^{p-1} sum_j z^j binom((p-1)/2,j)^2 (1+2pH_{2j}) (mod p^2)");
  add("lem21_poly", kAllOdd, 2, false,
      "coefficient-wise: sum_k binom(2k,k)^2 (1-z)^k/16^k = "
      "(-1)^{(p-1)/2} 4^{p-1} sum_j z^j binom((p-1)/2,j)^2 (1+pH_{(p-1)/2-j}) (mod p^2)");
  add("lem22_poly", kAllOdd, 1, false,
      "coefficient-wise: (-1)^{(p+1)/2} sum_k binom(2k,k)^2 H_k (1-z)^k/16^k = "
      "(4(2^{p-1}-1)/p) sum_j z^j binom((p-1)/2,j)^2 + sum_j z^j binom((p-1)/2,j)^2 H_j (mod p)");
  add("lem31_i", {8, {5, 7}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 (1+sqrt2)^{2k} = 0 (mod p)");
  add("lem31_ii", {3, {2}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 (-1)^k (2+sqrt3)^{2k} = 0 (mod p)");
  add("lem31_iii", {4, {3}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 (3+2sqrt2)^{2k} = 0 (mod p)");
  add("lem32_i", {8, {7}}, 2, false,
      "sum_k binom((p-1)/2,k)^2 P_{2k} = 0 (mod p^2)");
  add("lem32_ii", {12, {11}}, 2, false,
      "sum_k binom((p-1)/2,k)^2 (-1)^k R_{2k} = 0 (mod p^2)");
  add("lem32_iii", {8, {7}}, 2, false,
      "sum_k binom((p-1)/2,k)^2 W_{2k}/2^k = 0 (mod p^2)");
  add("lem41_i", {8, {1, 7}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 P_{2k} H_{2k} = 0 (mod p)");
  add("lem41_ii", {12, {11}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 (-1)^k R_{2k} H_{2k} = 0 (mod p)");
  add("lem41_iii", {8, {7}}, 1, false,
      "sum_k binom((p-1)/2,k)^2 (W_{2k}/2^k) H_{2k} = 0 (mod p)");
  add("morley", kAllOdd, 2, false,
      "binom(p-1,(p-1)/2) = (-1)^{(p-1)/2} 4^{p-1} (mod p^2)");
  add("lehmer", kAllOdd, 1, false,
      "H_{(p-1)/2} = -2 (2^{p-1}-1)/p (mod p)");
  add("wolstenholme_h", kAllOdd, 1, false, "H_{p-1} = 0 (mod p)");
  add("tail_div", kAllOdd, 2, false,
      "binom(2k,k)^2 = 0 (mod p^2) for every (p+1)/2 <= k <= p-1");
  add("hp1j", kAllOdd, 1, false, "H_{p-1-j} = H_j (mod p) for 1 <= j <= p-2");
  add("sym_zero_i", {4, {3}}, 2, false,
      "sum_j (-1)^j binom((p-1)/2,j)^2 = 0 exactly and the H_{2j}-weighted "
      "sum = 0 (mod p)");
  add("sym_zero_ii", {12, {1}}, 2, false,
      "sum_j (-1)^j chi3(j) binom((p-1)/2,j)^2 = 0 exactly and the "
      "H_{2j}-weighted sum = 0 (mod p)");
  add("sym_zero_iii", {12, {7}}, 2, false,
      "sum_j V_j(1,1) binom((p-1)/2,j)^2 = 0 exactly and the H_{2j}-weighted "
      "sum = 0 (mod p)");
  return r;
}

const std::unordered_map<std::string, int>& id_index() {
  static const std::unordered_map<std::string, int> m = [] {
    std::unordered_map<std::string, int> x;
    const auto& reg = list_checks();
    for (size_t i = 0; i < reg.size(); ++i) x.emplace(reg[i].id, static_cast<int>(i));
    return x;
  }();
  return m;
}

struct Outcome {
  uint64_t lhs = 0;
  bool pass = false;
};

// sum_{k=0}^{p-1} row2[k] c2[k]^2 seq[k] sign_k / den^k (mod p^2); seq may be
// null (weight 1) and sign_k one of 1, (-1)^k, chi3(k)
enum class SignMode { Plain, Alternating, Chi3 };

Outcome theorem1_sum(const PrimeContext& ctx, const std::vector<uint64_t>* seq,
                     long long den, SignMode sign) {
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t q = m2.inv(m2.from_int(den));
  uint64_t acc = 0, qk = 1;
  for (uint64_t k = 0; k < ctx.pm.p; ++k) {
    uint64_t t = m2.mul(ctx.row2[k], m2.mul(ctx.central2[k], ctx.central2[k]));
    if (seq) t = m2.mul(t, (*seq)[k]);
    t = m2.mul(t, qk);
    switch (sign) {
      case SignMode::Plain:
        acc = m2.add(acc, t);
        break;
      case SignMode::Alternating:
        acc = k % 2 ? m2.sub(acc, t) : m2.add(acc, t);
        break;
      case SignMode::Chi3: {
        int c = chi3(k);
        if (c == 1) acc = m2.add(acc, t);
        else if (c == -1) acc = m2.sub(acc, t);
        break;
      }
    }
    qk = m2.mul(qk, q);
  }
  return {acc, acc == 0};
}

Outcome thm2_check(const PrimeContext& ctx, LucasParams ab, bool u_family) {
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t p = ctx.pm.p, n = ctx.pm.half();
  const uint64_t inv16 = m2.inv(16 % m2.m());
  const LucasParams shifted{ab.a + 2, ab.a + ab.b + 1};
  std::vector<uint64_t> s = u_family ? lucas_u_prefix(n, ab, m2) : lucas_v_prefix(n, ab, m2);
  std::vector<uint64_t> t =
      u_family ? lucas_u_prefix(n, shifted, m2) : lucas_v_prefix(n, shifted, m2);

  uint64_t lhs = 0, qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t w = m2.mul(ctx.row2[k], m2.mul(ctx.central2[k], ctx.central2[k]));
    lhs = m2.add(lhs, m2.mul(m2.mul(w, s[k]), qk));
    qk = m2.mul(qk, inv16);
  }
  uint64_t rhs = 0;
  for (uint64_t j = 0; j <= n; ++j) {
    uint64_t b2 = m2.mul(ctx.half2[j], ctx.half2[j]);
    uint64_t hfac = m2.add(1, m2.mul(2 * p % m2.m(), ctx.harm[2 * j]));
    rhs = m2.add(rhs, m2.mul(m2.mul(b2, t[j]), hfac));
  }
  rhs = m2.mul(rhs, m2.pow(16, p - 1));
  if (n % 2) rhs = m2.neg(rhs);
  uint64_t diff = m2.sub(lhs, rhs);
  return {diff, diff == 0};
}

// multiply the coefficient buffer by (z-1) or (1-z), growing degree by one
void mul_z_minus_1(std::vector<uint64_t>& b, const Mod& m) {
  b.push_back(0);
  for (size_t j = b.size() - 1; j > 0; --j) b[j] = m.sub(b[j - 1], b[j]);
  b[0] = m.neg(b[0]);
}

void mul_1_minus_z(std::vector<uint64_t>& b, const Mod& m) {
  b.push_back(0);
  for (size_t j = b.size() - 1; j > 0; --j) b[j] = m.sub(b[j], b[j - 1]);
}

Outcome thm3_poly_check(const PrimeContext& ctx) {
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t p = ctx.pm.p, n = ctx.pm.half();
  const uint64_t inv16 = m2.inv(16 % m2.m());
  std::vector<uint64_t> acc(n + 1, 0);
  std::vector<uint64_t> b{1};  // (z-1)^k
  b.reserve(n + 2);
  uint64_t qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t w = m2.mul(m2.mul(ctx.row2[k], m2.mul(ctx.central2[k], ctx.central2[k])), qk);
    for (uint64_t j = 0; j <= k; ++j) acc[j] = m2.add(acc[j], m2.mul(w, b[j]));
    if (k < n) {
      mul_z_minus_1(b, m2);
      qk = m2.mul(qk, inv16);
    }
  }
  const uint64_t pow16 = m2.pow(16, p - 1);
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    uint64_t r = m2.mul(m2.mul(ctx.half2[j], ctx.half2[j]),
                        m2.add(1, m2.mul(2 * p % m2.m(), ctx.harm[2 * j])));
    r = m2.mul(r, pow16);
    if (n % 2) r = m2.neg(r);
    uint64_t d = m2.sub(acc[j], r);
    pass = pass && d == 0;
    lhs = m2.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome lem21_poly_check(const PrimeContext& ctx) {
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t p = ctx.pm.p, n = ctx.pm.half();
  const uint64_t inv16 = m2.inv(16 % m2.m());
  std::vector<uint64_t> acc(n + 1, 0);
  std::vector<uint64_t> b{1};  // (1-z)^k
  b.reserve(n + 2);
  uint64_t qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t w = m2.mul(m2.mul(ctx.central2[k], ctx.central2[k]), qk);
    for (uint64_t j = 0; j <= k; ++j) acc[j] = m2.add(acc[j], m2.mul(w, b[j]));
    if (k < n) {
      mul_1_minus_z(b, m2);
      qk = m2.mul(qk, inv16);
    }
  }
  const uint64_t pow4 = m2.pow(4, p - 1);
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    uint64_t r = m2.mul(m2.mul(ctx.half2[j], ctx.half2[j]),
                        m2.add(1, m2.mul(p % m2.m(), ctx.harm[n - j])));
    r = m2.mul(r, pow4);
    if (n % 2) r = m2.neg(r);
    uint64_t d = m2.sub(acc[j], r);
    pass = pass && d == 0;
    lhs = m2.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome lem22_poly_check(const PrimeContext& ctx) {
  const Mod mp = ctx.pm.mod_p();
  const uint64_t p = ctx.pm.p, n = ctx.pm.half();
  const uint64_t inv16 = mp.inv(16 % p);
  std::vector<uint64_t> acc(n + 1, 0);
  std::vector<uint64_t> b{1};  // (1-z)^k mod p
  b.reserve(n + 2);
  uint64_t qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t c = ctx.central2[k] % p;
    uint64_t w = mp.mul(mp.mul(mp.mul(c, c), ctx.harm[k]), qk);
    for (uint64_t j = 0; j <= k; ++j) acc[j] = mp.add(acc[j], mp.mul(w, b[j]));
    if (k < n) {
      mul_1_minus_z(b, mp);
      qk = mp.mul(qk, inv16);
    }
  }
  const bool negate = ((p + 1) / 2) % 2 == 1;  // (-1)^{(p+1)/2}
  const uint64_t fq4 = mp.mul(4 % p, fermat_quotient(2, ctx.pm));
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    uint64_t l = negate ? mp.neg(acc[j]) : acc[j];
    uint64_t h2 = mp.mul(ctx.half2[j] % p, ctx.half2[j] % p);
    uint64_t r = mp.add(mp.mul(fq4, h2), mp.mul(h2, ctx.harm[j]));
    uint64_t d = mp.sub(l, r);
    pass = pass && d == 0;
    lhs = mp.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome lemma31_outcome(const PrimeContext& ctx, Lemma31Variant v) {
  QuadElem s = lemma31_sum(v, ctx.pm);
  const Mod mp = ctx.pm.mod_p();
  return {mp.add(s.x, s.y), s.is_zero()};
}

Outcome lem32_check(const PrimeContext& ctx, SeqTag tag, bool alternating, bool halve) {
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t n = ctx.pm.half();
  std::vector<uint64_t> s = named_prefix(tag, 2 * n, m2);
  const uint64_t inv2 = halve ? m2.inv(2) : 1;
  uint64_t acc = 0, qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t t = m2.mul(m2.mul(ctx.half2[k], ctx.half2[k]), s[2 * k]);
    if (halve) t = m2.mul(t, qk);
    if (alternating && k % 2)
      acc = m2.sub(acc, t);
    else
      acc = m2.add(acc, t);
    qk = m2.mul(qk, inv2);
  }
  return {acc, acc == 0};
}

Outcome lem41_check(const PrimeContext& ctx, SeqTag tag, bool alternating, bool halve) {
  const Mod mp = ctx.pm.mod_p();
  const uint64_t n = ctx.pm.half();
  std::vector<uint64_t> s = named_prefix(tag, 2 * n, mp);
  const uint64_t inv2 = halve ? mp.inv(2) : 1;
  uint64_t acc = 0, qk = 1;
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t hb = ctx.half2[k] % ctx.pm.p;
    uint64_t t = mp.mul(mp.mul(mp.mul(hb, hb), s[2 * k]), ctx.harm[2 * k]);
    if (halve) t = mp.mul(t, qk);
    if (alternating && k % 2)
      acc = mp.sub(acc, t);
    else
      acc = mp.add(acc, t);
    qk = mp.mul(qk, inv2);
  }
  return {acc, acc == 0};
}

// the paired "plain sum vanishes outright, H_{2j}-weighted sum vanishes mod p"
// checks behind the sign-symmetry arguments
Outcome sym_zero_check(const PrimeContext& ctx, int which) {
  const Mod m2 = ctx.pm.mod_p2();
  const Mod mp = ctx.pm.mod_p();
  const uint64_t n = ctx.pm.half();
  std::vector<uint64_t> v2, vp_;
  if (which == 3) {
    v2 = lucas_v_prefix(n, {1, 1}, m2);
    vp_ = lucas_v_prefix(n, {1, 1}, mp);
  }
  uint64_t a = 0, bsum = 0;
  for (uint64_t j = 0; j <= n; ++j) {
    long long sign = 1;
    if (which == 1) sign = (j % 2) ? -1 : 1;
    if (which == 2) sign = (j % 2 ? -1 : 1) * chi3(j);
    uint64_t t2 = m2.mul(ctx.half2[j], ctx.half2[j]);
    if (which == 3) t2 = m2.mul(t2, v2[j]);
    if (sign == 1)
      a = m2.add(a, t2);
    else if (sign == -1)
      a = m2.sub(a, t2);
    uint64_t hb = ctx.half2[j] % ctx.pm.p;
    uint64_t tp = mp.mul(mp.mul(hb, hb), ctx.harm[2 * j]);
    if (which == 3) tp = mp.mul(tp, vp_[j]);
    if (sign == 1)
      bsum = mp.add(bsum, tp);
    else if (sign == -1)
      bsum = mp.sub(bsum, tp);
  }
  return {a, a == 0 && bsum == 0};
}

Outcome tail_div_check(const PrimeContext& ctx) {
  const Mod m2 = ctx.pm.mod_p2();
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t k = (ctx.pm.p + 1) / 2; k < ctx.pm.p; ++k) {
    uint64_t t = m2.mul(ctx.central2[k], ctx.central2[k]);
    pass = pass && t == 0;
    lhs = m2.add(lhs, t);
  }
  return {lhs, pass};
}

Outcome hp1j_check(const PrimeContext& ctx) {
  const Mod mp = ctx.pm.mod_p();
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 1; j + 1 < ctx.pm.p; ++j) {
    uint64_t d = mp.sub(ctx.harm[ctx.pm.p - 1 - j], ctx.harm[j]);
    pass = pass && d == 0;
    lhs = mp.add(lhs, d);
  }
  return {lhs, pass};
}

}  // namespace

const std::vector<CheckDescriptor>& list_checks() {
  static const std::vector<CheckDescriptor> reg = build_registry();
  return reg;
}

const CheckDescriptor& find_check(const std::string& id) {
  auto it = id_index().find(id);
  if (it == id_index().end()) throw InvalidConfig("unknown check id: " + id);
  return list_checks()[it->second];
}

PrimeContext::PrimeContext(const PrimeModulus& pm_)
    : pm(pm_),
      central2(central_binom_table(pm_)),
      row2(row_binom_table(pm_)),
      half2(half_binom_table(pm_, pm_.mod_p2())),
      harm(harmonic_table(pm_)) {}

CheckResult check(const std::string& id, const PrimeContext& ctx,
                  std::optional<LucasParams> params, Perturbation pert) {
  const CheckDescriptor& d = find_check(id);
  const int idx = id_index().at(id);
  if (d.parametric && !params)
    throw InvalidConfig("check " + id + " requires Lucas parameters");

  CheckResult res;
  res.prime = ctx.pm.p;
  res.id = id;
  res.params = d.parametric ? params : std::nullopt;
  res.modulus_power = d.modulus_power;
  res.applicable = d.applicability.contains(ctx.pm.p);
  if (idx == kThm2u && res.applicable) {
    __int128 disc = static_cast<__int128>(params->a) * params->a -
                    static_cast<__int128>(4) * params->b;
    __int128 p2 = static_cast<__int128>(ctx.pm.p_squared);
    if (disc % p2 == 0) res.applicable = false;
  }
  if (idx == kThm1iii && pert == Perturbation::Thm1iiiDenom7 && ctx.pm.p == 7)
    res.applicable = false;  // perturbed denominator collapses mod 7
  if (!res.applicable) return res;

  Outcome o;
  switch (idx) {
    case kRvMortenson: {
      const Mod m2 = ctx.pm.mod_p2();
      const uint64_t inv16 = m2.inv(16 % m2.m());
      uint64_t acc = 0, qk = 1;
      for (uint64_t k = 0; k < ctx.pm.p; ++k) {
        acc = m2.add(acc, m2.mul(m2.mul(ctx.central2[k], ctx.central2[k]), qk));
        qk = m2.mul(qk, inv16);
      }
      uint64_t diff = m2.sub(acc, m2.from_int(legendre(-1, ctx.pm)));
      o = {diff, diff == 0};
      break;
    }
    case kThm1i:
      o = theorem1_sum(ctx, nullptr, -8, SignMode::Plain);
      break;
    case kThm1ii:
      o = theorem1_sum(ctx, nullptr, 16, SignMode::Chi3);
      break;
    case kThm1iii: {
      std::vector<uint64_t> s = named_prefix(SeqTag::P, ctx.pm.p - 1, ctx.pm.mod_p2());
      o = theorem1_sum(ctx, &s, pert == Perturbation::Thm1iiiDenom7 ? 7 : 8,
                       SignMode::Plain);
      break;
    }
    case kThm1iv: {
      std::vector<uint64_t> s = named_prefix(SeqTag::R, ctx.pm.p - 1, ctx.pm.mod_p2());
      o = theorem1_sum(ctx, &s, -4, SignMode::Plain);
      break;
    }
    case kThm2v:
      o = thm2_check(ctx, *params, false);
      break;
    case kThm2u:
      o = thm2_check(ctx, *params, true);
      break;
    case kThm1nI: {
      std::vector<uint64_t> s = named_prefix(SeqTag::W, ctx.pm.p - 1, ctx.pm.mod_p2());
      o = theorem1_sum(ctx, &s, 4, SignMode::Plain);
      break;
    }
    case kThm1nII: {
      std::vector<uint64_t> s = named_prefix(SeqTag::M, ctx.pm.p - 1, ctx.pm.mod_p2());
      o = theorem1_sum(ctx, &s, 16, SignMode::Alternating);
      break;
    }
    case kThm1nIII: {
      const Mod m2 = ctx.pm.mod_p2();
      const uint64_t inv16 = m2.inv(16 % m2.m());
      uint64_t s3 = 0, sall = 0, qk = 1;
      for (uint64_t k = 0; k < ctx.pm.p; ++k) {
        uint64_t t =
            m2.mul(m2.mul(ctx.row2[k], m2.mul(ctx.central2[k], ctx.central2[k])), qk);
        sall = m2.add(sall, t);
        if (k % 3 == 0) s3 = m2.add(s3, t);
        qk = m2.mul(qk, inv16);
      }
      uint64_t diff = m2.sub(s3, m2.mul(m2.inv(3), sall));
      o = {diff, diff == 0};
      break;
    }
    case kThm3Poly:
      o = thm3_poly_check(ctx);
      break;
    case kLem21Poly:
      o = lem21_poly_check(ctx);
      break;
    case kLem22Poly:
      o = lem22_poly_check(ctx);
      break;
    case kLem31i:
      o = lemma31_outcome(ctx, Lemma31Variant::i);
      break;
    case kLem31ii:
      o = lemma31_outcome(ctx, Lemma31Variant::ii);
      break;
    case kLem31iii:
      o = lemma31_outcome(ctx, Lemma31Variant::iii);
      break;
    case kLem32i:
      o = lem32_check(ctx, SeqTag::P, false, false);
      break;
    case kLem32ii:
      o = lem32_check(ctx, SeqTag::R, true, false);
      break;
    case kLem32iii:
      o = lem32_check(ctx, SeqTag::W, false, true);
      break;
    case kLem41i:
      o = lem41_check(ctx, SeqTag::P, false, false);
      break;
    case kLem41ii:
      o = lem41_check(ctx, SeqTag::R, true, false);
      break;
    case kLem41iii:
      o = lem41_check(ctx, SeqTag::W, false, true);
      break;
    case kMorley: {
      const Mod m2 = ctx.pm.mod_p2();
      uint64_t e = ctx.pm.p - 1 - (pert == Perturbation::MorleyPowM1 ? 1 : 0);
      uint64_t rhs = m2.pow(4, e);
      if (ctx.pm.half() % 2) rhs = m2.neg(rhs);
      uint64_t diff = m2.sub(ctx.row2[ctx.pm.half()], rhs);
      o = {diff, diff == 0};
      break;
    }
    case kLehmer: {
      const Mod mp = ctx.pm.mod_p();
      uint64_t diff =
          mp.add(ctx.harm[ctx.pm.half()], mp.mul(2 % ctx.pm.p, fermat_quotient(2, ctx.pm)));
      o = {diff, diff == 0};
      break;
    }
    case kWolstenholmeH:
      o = {ctx.harm[ctx.pm.p - 1], ctx.harm[ctx.pm.p - 1] == 0};
      break;
    case kTailDiv:
      o = tail_div_check(ctx);
      break;
    case kHp1j:
      o = hp1j_check(ctx);
      break;
    case kSymZeroI:
      o = sym_zero_check(ctx, 1);
      break;
    case kSymZeroII:
      o = sym_zero_check(ctx, 2);
      break;
    case kSymZeroIII:
      o = sym_zero_check(ctx, 3);
      break;
    default:
      throw InvalidConfig("unhandled check id: " + id);
  }
  res.lhs = o.lhs;
  res.pass = o.pass;
  return res;
}

CheckResult check(const std::string& id, const PrimeModulus& pm,
                  std::optional<LucasParams> params, Perturbation pert) {
  return check(id, PrimeContext(pm), params, pert);
}

CheckResult check_thm1n_iii_delta(const PrimeContext& ctx) {
  CheckResult res;
  res.prime = ctx.pm.p;
  res.id = "thm1n_iii_delta";
  res.modulus_power = 2;
  res.applicable = ctx.pm.p % 12 == 7;
  if (!res.applicable) return res;
  const Mod m2 = ctx.pm.mod_p2();
  const uint64_t inv16 = m2.inv(16 % m2.m());
  uint64_t acc = 0, qk = 1;
  for (uint64_t j = 0; j <= ctx.pm.half(); ++j) {
    uint64_t t = m2.mul(m2.mul(ctx.row2[j], m2.mul(ctx.central2[j], ctx.central2[j])), qk);
    int dl = delta3(j);
    if (dl == 2)
      acc = m2.add(acc, m2.mul(2, t));
    else
      acc = m2.sub(acc, t);
    qk = m2.mul(qk, inv16);
  }
  res.lhs = acc;
  res.pass = acc == 0;
  return res;
}

}  // namespace congsweep
