#include "congsweep/sequences.hpp"

#include "congsweep/exact.hpp"

namespace congsweep {

std::vector<uint64_t> lucas_u_prefix(uint64_t n_max, LucasParams ab, const Mod& mod) {
  std::vector<uint64_t> u(n_max + 1);
  const uint64_t am = mod.from_int(ab.a), bm = mod.from_int(ab.b);
  u[0] = 0;
  if (n_max >= 1) u[1] = 1 % mod.m();
  for (uint64_t n = 2; n <= n_max; ++n)
    u[n] = mod.sub(mod.mul(am, u[n - 1]), mod.mul(bm, u[n - 2]));
  return u;
}

std::vector<uint64_t> lucas_v_prefix(uint64_t n_max, LucasParams ab, const Mod& mod) {
  std::vector<uint64_t> v(n_max + 1);
  const uint64_t am = mod.from_int(ab.a), bm = mod.from_int(ab.b);
  v[0] = 2 % mod.m();
  if (n_max >= 1) v[1] = am;
  for (uint64_t n = 2; n <= n_max; ++n)
    v[n] = mod.sub(mod.mul(am, v[n - 1]), mod.mul(bm, v[n - 2]));
  return v;
}

uint64_t lucas_u(uint64_t n, LucasParams ab, const Mod& mod) {
  return lucas_u_prefix(n, ab, mod)[n];
}

uint64_t lucas_v(uint64_t n, LucasParams ab, const Mod& mod) {
  return lucas_v_prefix(n, ab, mod)[n];
}

std::vector<mpz_class> lucas_u_prefix_exact(uint64_t n_max, LucasParams ab) {
  const long a = static_cast<long>(ab.a), b = static_cast<long>(ab.b);
  std::vector<mpz_class> u(n_max + 1);
  u[0] = 0;
  if (n_max >= 1) u[1] = 1;
  for (uint64_t n = 2; n <= n_max; ++n) u[n] = a * u[n - 1] - b * u[n - 2];
  return u;
}

std::vector<mpz_class> lucas_v_prefix_exact(uint64_t n_max, LucasParams ab) {
  const long a = static_cast<long>(ab.a), b = static_cast<long>(ab.b);
  std::vector<mpz_class> v(n_max + 1);
  v[0] = 2;
  if (n_max >= 1) v[1] = a;
  for (uint64_t n = 2; n <= n_max; ++n) v[n] = a * v[n - 1] - b * v[n - 2];
  return v;
}

mpz_class lucas_u_exact(uint64_t n, LucasParams ab) {
  return lucas_u_prefix_exact(n, ab)[n];
}

mpz_class lucas_v_exact(uint64_t n, LucasParams ab) {
  return lucas_v_prefix_exact(n, ab)[n];
}

int chi3(uint64_t k) {
  switch (k % 3) {
    case 0: return 0;
    case 1: return 1;
    default: return -1;
  }
}

int delta3(uint64_t k) { return k % 3 == 0 ? 2 : -1; }

namespace {

struct Rec {
  long x0, x1, c1, c2;  // x_n = c1 x_{n-1} + c2 x_{n-2}
};

Rec rec_for(SeqTag tag) {
  switch (tag) {
    case SeqTag::P: return {0, 1, 2, 1};
    case SeqTag::R: return {2, 4, 4, -1};
    case SeqTag::W: return {0, 1, 8, 2};
    case SeqTag::M: return {0, 1, 3, -3};
    default: return {0, 0, 0, 0};  // unused; chi3/delta3 are periodic
  }
}

}  // namespace

std::vector<uint64_t> named_prefix(SeqTag tag, uint64_t n_max, const Mod& mod) {
  std::vector<uint64_t> s(n_max + 1);
  if (tag == SeqTag::chi3 || tag == SeqTag::delta3) {
    for (uint64_t n = 0; n <= n_max; ++n)
      s[n] = mod.from_int(tag == SeqTag::chi3 ? chi3(n) : delta3(n));
    return s;
  }
  const Rec r = rec_for(tag);
  s[0] = mod.from_int(r.x0);
  if (n_max >= 1) s[1] = mod.from_int(r.x1);
  const uint64_t c1 = mod.from_int(r.c1), c2 = mod.from_int(r.c2);
  for (uint64_t n = 2; n <= n_max; ++n)
    s[n] = mod.add(mod.mul(c1, s[n - 1]), mod.mul(c2, s[n - 2]));
  return s;
}

uint64_t named(SeqTag tag, uint64_t n, const Mod& mod) {
  return named_prefix(tag, n, mod)[n];
}

mpz_class named_exact(SeqTag tag, uint64_t n) {
  if (tag == SeqTag::chi3) return chi3(n);
  if (tag == SeqTag::delta3) return delta3(n);
  const Rec r = rec_for(tag);
  mpz_class a(r.x0), b(r.x1);
  if (n == 0) return a;
  for (uint64_t i = 2; i <= n; ++i) {
    mpz_class c = r.c1 * b + r.c2 * a;
    a = b;
    b = c;
  }
  return b;
}

std::vector<IdentityResult> bridge_identity_suite(uint64_t n_max) {
  std::vector<IdentityResult> out;
  auto push = [&out](const std::string& id, bool ok) { out.push_back({id, ok}); };

  std::vector<mpz_class> pell = lucas_u_prefix_exact(2 * n_max, {2, -1});
  std::vector<mpz_class> rr = lucas_v_prefix_exact(2 * n_max, {4, 1});
  std::vector<mpz_class> ww(2 * n_max + 1);
  for (uint64_t n = 0; n <= 2 * n_max; ++n) ww[n] = named_exact(SeqTag::W, n);
  std::vector<mpz_class> mm(n_max + 1);
  for (uint64_t n = 0; n <= n_max; ++n) mm[n] = named_exact(SeqTag::M, n);

  std::vector<mpz_class> u44 = lucas_u_prefix_exact(n_max, {4, -4});
  std::vector<mpz_class> u61 = lucas_u_prefix_exact(n_max, {6, 1});
  std::vector<mpz_class> v1616 = lucas_v_prefix_exact(n_max, {-16, 16});
  std::vector<mpz_class> v141 = lucas_v_prefix_exact(n_max, {-14, 1});
  std::vector<mpz_class> u3232 = lucas_u_prefix_exact(n_max, {32, -32});
  std::vector<mpz_class> u341 = lucas_u_prefix_exact(n_max, {34, 1});
  std::vector<mpz_class> v44 = lucas_v_prefix_exact(n_max, {-4, 4});
  std::vector<mpz_class> v21 = lucas_v_prefix_exact(n_max, {-2, 1});
  std::vector<mpz_class> u11n = lucas_u_prefix_exact(n_max, {-1, 1});
  std::vector<mpz_class> u11 = lucas_u_prefix_exact(n_max, {1, 1});
  std::vector<mpz_class> u33 = lucas_u_prefix_exact(n_max, {-3, 3});
  std::vector<mpz_class> v11n = lucas_v_prefix_exact(n_max, {-1, 1});
  std::vector<mpz_class> v11 = lucas_v_prefix_exact(6 * n_max + 3, {1, 1});

  bool ok;

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n)
    ok = ok && pow_int(2, n) * pell[n] == 2 * u44[n];
  push("p_scale", ok);  // 2^n P_n = 2 U_n(4,-4); the factor 2 is forced by P_1 = 1

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n) ok = ok && pell[2 * n] == 2 * u61[n];
  push("p_double", ok);  // P_{2n} = 2 U_n(6,1); the factor 2 is forced by P_2 = 2

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n)
    ok = ok && pow_int(-4, n) * rr[n] == v1616[n];
  push("r_scale", ok);  // (-4)^n R_n = V_n(-16,16)

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n)
    ok = ok && pow_int(-1, n) * rr[2 * n] == v141[n];
  push("r_double", ok);  // (-1)^n R_{2n} = V_n(-14,1)

  ok = true;
  for (uint64_t n = 1; n <= n_max; ++n)
    ok = ok && pow_int(4, n - 1) * ww[n] == u3232[n];
  push("w_scale", ok);  // 4^{n-1} W_n = U_n(32,-32), n >= 1

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n)
    ok = ok && ww[2 * n] == pow_int(2, n + 2) * u341[n];
  push("w_double", ok);  // W_{2n} = 2^{n+2} U_n(34,1)

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n) ok = ok && v44[n] == -pow_int(-2, n + 1);
  push("v_neg4_4", ok);  // V_n(-4,4) = -(-2)^{n+1}

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n) ok = ok && v21[n] == 2 * pow_int(-1, n);
  push("v_neg2_1", ok);  // V_n(-2,1) = 2(-1)^n

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n) ok = ok && u11n[n] == chi3(n);
  push("u_chi3", ok);  // U_n(-1,1) = chi3(n)

  ok = true;
  for (uint64_t n = 0; n <= n_max; ++n)
    ok = ok && u11[n] == pow_int(-1, n + 1) * chi3(n);
  push("u_chi3_sign", ok);  // U_n(1,1) = (-1)^{n-1} chi3(n)

  ok = true;
  for (uint64_t k = 0; k <= n_max; ++k)
    ok = ok && pow_int(-1, k + 1) * mm[k] == u33[k];
  push("m_u33", ok);  // (-1)^{k-1} M_k = U_k(-3,3)

  ok = true;
  for (uint64_t k = 0; k <= n_max; ++k) ok = ok && v11n[k] == delta3(k);
  push("delta3_v", ok);  // delta3(k) = V_k(-1,1)

  // W_{2k} = 2^{k+2} (alpha^{2k} - beta^{2k}) / (alpha^2 - beta^2) in Q(sqrt2)
  ok = true;
  const QuadRational alpha(3, 2, 2), beta(3, -2, 2);
  const QuadRational denom = quad_pow_exact(alpha, 2) - quad_pow_exact(beta, 2);
  for (uint64_t k = 0; k <= n_max; ++k) {
    QuadRational num = quad_pow_exact(alpha, 2 * k) - quad_pow_exact(beta, 2 * k);
    QuadRational ratio = quad_div(num, denom);
    QuadRational rhs = scale(ratio, BigRational(pow_int(2, k + 2)));
    ok = ok && rhs.is_rational() && rhs.x == BigRational(ww[2 * k]);
  }
  push("w_alphabeta", ok);

  ok = true;
  for (uint64_t h = 0; 6 * h + 3 <= 6 * n_max + 3; ++h)
    for (uint64_t k = 0; k <= 6 * h + 3; ++k)
      ok = ok && v11[k] == -v11[6 * h + 3 - k];
  push("v11_antisym", ok);  // V_k(1,1) = -V_{6h+3-k}(1,1)

  return out;
}

}  // namespace congsweep
