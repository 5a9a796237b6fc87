#include "pglcat/extraspecial.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

void require_odd_prime(unsigned p) {
  if (p < 3 || !is_prime(Int(p))) throw DomainError("p must be an odd prime");
}

// Sign of the permutation j -> d*j on Z/p (d nonzero mod p).
int multiplication_permutation_sign(unsigned p, long d) {
  long dd = d % static_cast<long>(p);
  if (dd < 0) dd += p;
  std::vector<bool> seen(p, false);
  int sign = 1;
  for (unsigned start = 0; start < p; ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    unsigned j = start;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<unsigned>((static_cast<unsigned long>(dd) * j) % p);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

long binom2(long j) { return j * (j - 1) / 2; }

}  // namespace

unsigned default_multiplicative_generator(unsigned p) {
  require_odd_prime(p);
  for (unsigned m = 2; m < p; ++m) {
    bool generator = true;
    // m generates iff m^((p-1)/r) != 1 for every prime r | p-1.
    FactoredInteger f = factorize(Int(p - 1));
    for (const auto& [r, e] : f.factors()) {
      Int mm(m), pw, mod(p);
      Int expo = Int(p - 1) / r;
      mpz_powm(pw.get_mpz_t(), mm.get_mpz_t(), expo.get_mpz_t(), mod.get_mpz_t());
      if (pw == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return m;
  }
  throw DomainError("no multiplicative generator found");
}

CycloMatrix make_sigma(unsigned p) {
  require_odd_prime(p);
  CycloMatrix m(p, p);
  for (unsigned j = 0; j < p; ++j) m.set((j + 1) % p, j, CycloNumber(1, p));
  return m;
}

CycloMatrix make_tau(unsigned p) {
  require_odd_prime(p);
  CycloMatrix m(p, p);
  for (unsigned j = 0; j < p; ++j) m.set(j, j, CycloNumber::zeta(p, j));
  return m;
}

CycloMatrix make_lambda(unsigned p, long d) {
  require_odd_prime(p);
  long dd = d % static_cast<long>(p);
  if (dd < 0) dd += p;
  if (dd == 0) throw DomainError("lambda_d requires d nonzero mod p");
  // eps = sign of the permutation keeps the determinant at 1 (p odd).
  int sign = multiplication_permutation_sign(p, dd);
  CycloMatrix m(p, p);
  for (unsigned j = 0; j < p; ++j)
    m.set(static_cast<unsigned>((dd * j) % p), j, CycloNumber(sign, p));
  return m;
}

namespace {

// sqrt(p) inside Q(zeta_M) for M = 4p^2, via the quadratic Gauss sum.
CycloNumber sqrt_p_cyclo(unsigned p, unsigned M) {
  std::vector<std::pair<long, Rat>> terms;
  for (unsigned a = 1; a < p; ++a) {
    // Legendre symbol by Euler's criterion.
    Int ls, base(a), e((p - 1) / 2), mod(p);
    mpz_powm(ls.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    int leg = ls == 1 ? 1 : -1;
    terms.emplace_back(static_cast<long>(a) * (M / p), Rat(leg));
  }
  CycloNumber g = CycloNumber::from_terms(M, terms);
  if (p % 4 == 1) return g;                                   // g = sqrt(p)
  long i3 = 3L * static_cast<long>(p) * static_cast<long>(p);  // zeta_4^3 = -i
  return CycloNumber::zeta(M, i3) * g;                        // g = i sqrt(p)
}

}  // namespace

CycloMatrix make_f1(unsigned p, bool unimodular) {
  require_odd_prime(p);
  if (!unimodular) {
    CycloMatrix m(p, p);
    for (unsigned j = 0; j < p; ++j)
      m.set(j, j, CycloNumber::zeta(p, binom2(static_cast<long>(j))));
    return m;
  }
  // det(unscaled) = zeta_p^C(p,3); c1 = zeta_M^{-4 C(p,3) mod 4p} cancels it.
  unsigned M = 4 * p * p;
  long t = -4 * (binom2(static_cast<long>(p)) * (static_cast<long>(p) - 2) / 3);
  CycloNumber c1 = CycloNumber::zeta(M, t % static_cast<long>(4 * p));
  CycloMatrix m(p, M);
  for (unsigned j = 0; j < p; ++j) {
    long e = binom2(static_cast<long>(j)) % static_cast<long>(p);
    m.set(j, j, c1 * CycloNumber::zeta(M, e * static_cast<long>(M / p)));
  }
  return m;
}

CycloMatrix make_f2(unsigned p, bool unimodular) {
  require_odd_prime(p);
  if (!unimodular) {
    CycloMatrix m(p, p);
    for (unsigned j = 0; j < p; ++j)
      for (unsigned k = 0; k < p; ++k)
        m.set(k, j, CycloNumber::zeta(p, static_cast<long>(j) * k));
    return m;
  }
  // det of the character matrix (zeta^{jk}) is i^{p(p-1)/2} p^{p/2};
  // c2 = zeta_M^s / sqrt(p) with s p = -(p(p-1)/2) p^2 mod 4p^2.
  unsigned M = 4 * p * p;
  long s = -(static_cast<long>(p) * static_cast<long>(p) * (static_cast<long>(p) - 1) / 2) %
           static_cast<long>(4 * p);
  CycloNumber c2 = CycloNumber::zeta(M, s) * sqrt_p_cyclo(p, M).inverse();
  CycloMatrix m(p, M);
  for (unsigned j = 0; j < p; ++j)
    for (unsigned k = 0; k < p; ++k) {
      long e = (static_cast<long>(j) * k) % p;
      m.set(k, j, c2 * CycloNumber::zeta(M, e * static_cast<long>(M / p)));
    }
  return m;
}

CycloMatrix make_f3(unsigned p, unsigned m, bool unimodular) {
  require_odd_prime(p);
  {
    // m must generate the multiplicative group mod p.
    FactoredInteger f = factorize(Int(p - 1));
    if (m % p == 0) throw DomainError("f3 requires m nonzero mod p");
    for (const auto& [r, e] : f.factors()) {
      Int mm(m), pw, mod(p);
      Int expo = Int(p - 1) / r;
      mpz_powm(pw.get_mpz_t(), mm.get_mpz_t(), expo.get_mpz_t(), mod.get_mpz_t());
      if (pw == 1) throw DomainError("m does not generate the multiplicative group mod p");
    }
  }
  // The permutation j -> jm is a (p-1)-cycle, so its sign is -1 and
  // c3 = -1 restores determinant 1; projectively c3 is irrelevant.
  int c3 = unimodular ? -1 : 1;
  CycloMatrix out(p, p);
  for (unsigned j = 0; j < p; ++j)
    out.set(static_cast<unsigned>((static_cast<unsigned long>(j) * m) % p), j,
            CycloNumber(c3, p));
  return out;
}

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b) { return a.kron(b); }

ClosureResult projective_closure(const std::vector<CycloMatrix>& generators, const Int& cap) {
  if (generators.empty()) throw DomainError("closure requires at least one generator");
  for (const auto& g : generators)
    if (g.determinant().is_zero()) throw DomainError("singular generator");

  std::vector<ProjectiveMatrix> gens;
  gens.reserve(generators.size());
  unsigned mod = 1;
  for (const auto& g : generators) mod = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(mod, g.modulus()));
  for (const auto& g : generators) gens.push_back(ProjectiveMatrix::normalize(g.embedded(mod)));

  std::unordered_set<std::string> seen;
  std::deque<CycloMatrix> frontier;
  std::vector<ProjectiveMatrix> classes;
  auto push = [&](const ProjectiveMatrix& m) {
    std::string key = m.rep.key();
    if (seen.insert(std::move(key)).second) {
      classes.push_back(m);
      frontier.push_back(m.rep);
      return true;
    }
    return false;
  };
  push(ProjectiveMatrix::normalize(CycloMatrix::identity(generators[0].size(), mod)));
  while (!frontier.empty()) {
    CycloMatrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      push(ProjectiveMatrix::normalize(m * g.rep));
      if (Int(classes.size()) > cap) return ClosureResult{false, std::move(classes)};
    }
  }
  return ClosureResult{true, std::move(classes)};
}

LinearClosureResult linear_closure(const std::vector<CycloMatrix>& generators, const Int& cap) {
  if (generators.empty()) throw DomainError("closure requires at least one generator");
  unsigned mod = 1;
  for (const auto& g : generators) mod = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(mod, g.modulus()));
  std::vector<CycloMatrix> gens;
  for (const auto& g : generators) gens.push_back(g.embedded(mod));

  std::unordered_set<std::string> seen;
  std::deque<CycloMatrix> frontier;
  Int count = 0;
  auto push = [&](CycloMatrix m) {
    std::string key = m.key();
    if (seen.insert(std::move(key)).second) {
      ++count;
      frontier.push_back(std::move(m));
    }
  };
  push(CycloMatrix::identity(generators[0].size(), mod));
  while (!frontier.empty()) {
    CycloMatrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      push(m * g);
      if (count > cap) return LinearClosureResult{false, count};
    }
  }
  return LinearClosureResult{true, count};
}

NormalizerOrders normalizer_group_orders(unsigned p, std::optional<Int> cap_opt, bool force) {
  require_odd_prime(p);
  Int pw = Int(p);
  Int default_cap = 2 * pw * pw * pw * pw * (pw * pw - 1);
  Int cap = cap_opt.value_or(default_cap);
  if (p >= 11 && !force)
    throw DomainError("closure for p >= 11 is disabled by default; force to enable");

  NormalizerOrders out;
  out.p = p;

  CycloMatrix sigma = make_sigma(p), tau = make_tau(p);
  ClosureResult socle = projective_closure({sigma, tau}, cap);
  if (!socle.complete) throw DomainError("cap exceeded on the socle closure");
  out.socle_classes = Int(socle.classes.size());

  unsigned m = default_multiplicative_generator(p);
  ClosureResult full =
      projective_closure({sigma, tau, make_f1(p), make_f2(p), make_f3(p, m)}, cap);
  if (!full.complete) throw DomainError("cap exceeded on the full closure");
  out.projective_classes = Int(full.classes.size());

  // SL-side order: the commutator of sigma and tau is the scalar zeta, all
  // five scaled generators are unimodular, and scalars in SL(p,C) form C_p;
  // hence exactly p matrices above each projective class.
  CycloNumber zeta = CycloNumber::zeta(p);
  if (!(tau * sigma == sigma.scaled(zeta) * tau))
    throw DomainError("commutator check failed");
  bool dets_verified = p <= 7;
  if (dets_verified) {
    for (const CycloMatrix& g :
         {make_sigma(p), make_tau(p), make_lambda(p, -1), make_f1(p, true), make_f2(p, true),
          make_f3(p, m, true)}) {
      CycloNumber det = g.determinant();
      if (!(det == CycloNumber(1, g.modulus())))
        throw DomainError("unimodular scaling failed: det = " + det.str());
    }
    out.notes.push_back("determinants of the scaled generators verified exactly");
  } else {
    out.notes.push_back("determinant verification skipped at this p (cost); scaling is by the "
                        "closed-form constants");
  }
  out.unimodular_order = Int(p) * out.projective_classes;
  return out;
}

namespace {

std::string line_key(const std::vector<CycloNumber>& v) {
  // Scalar-normalized: first nonzero coordinate scaled to 1.
  size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) throw DomainError("zero vector in polygon");
  CycloNumber inv = v[lead].inverse();
  std::string key;
  for (const auto& c : v) (c * inv).append_key(key);
  return key;
}

std::vector<CycloNumber> apply_matrix(const CycloMatrix& m, const std::vector<CycloNumber>& v) {
  std::vector<CycloNumber> out(v.size(), CycloNumber(Rat(0), m.modulus()));
  for (unsigned i = 0; i < m.size(); ++i)
    for (unsigned j = 0; j < m.size(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + m.at(i, j) * v[j];
    }
  return out;
}

std::string polygon_key(const std::vector<std::vector<CycloNumber>>& delta) {
  std::vector<std::string> keys;
  for (const auto& v : delta) keys.push_back(line_key(v));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (auto& k : keys) out += k + "#";
  return out;
}

}  // namespace

PolygonSet polygons(unsigned p) {
  require_odd_prime(p);
  PolygonSet out;
  out.p = p;
  auto basis_vec = [&](unsigned idx) {
    std::vector<CycloNumber> v(p, CycloNumber(Rat(0), p));
    v[idx] = CycloNumber(1, p);
    return v;
  };
  Polygon inf{"inf", {}};
  for (unsigned j = 0; j < p; ++j) inf.vectors.push_back(basis_vec(j));
  out.polygons.push_back(std::move(inf));

  Polygon d0{"0", {}};
  for (unsigned j = 0; j < p; ++j) {
    std::vector<CycloNumber> u(p, CycloNumber(Rat(0), p));
    for (unsigned k = 0; k < p; ++k) u[k] = CycloNumber::zeta(p, static_cast<long>(j) * k);
    d0.vectors.push_back(std::move(u));
  }
  out.polygons.push_back(std::move(d0));

  CycloMatrix sigma = make_sigma(p);
  for (unsigned i = 1; i < p; ++i) {
    std::vector<CycloNumber> w(p, CycloNumber(Rat(0), p));
    for (unsigned k = 0; k < p; ++k)
      w[k] = CycloNumber::zeta(p, static_cast<long>(i) * binom2(static_cast<long>(k)));
    Polygon di{std::to_string(i), {}};
    di.vectors.push_back(w);
    for (unsigned j = 1; j < p; ++j) di.vectors.push_back(apply_matrix(sigma, di.vectors.back()));
    out.polygons.push_back(std::move(di));
  }
  return out;
}

bool is_polygon(const std::vector<std::vector<CycloNumber>>& delta,
                const std::vector<CycloMatrix>& generators) {
  if (delta.empty()) return false;
  std::unordered_set<std::string> lines;
  for (const auto& v : delta) lines.insert(line_key(v));
  // Spanning check: the matrix of the vectors must be nonsingular.
  unsigned n = static_cast<unsigned>(delta.size());
  unsigned mod = 1;
  for (const auto& v : delta)
    for (const auto& c : v) mod = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(mod, c.modulus()));
  for (const auto& g : generators) mod = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(mod, g.modulus()));
  CycloMatrix span(n, mod);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) span.set(i, j, delta[j][i]);
  if (span.determinant().is_zero()) return false;

  for (const auto& g : generators) {
    for (const auto& v : delta) {
      std::vector<CycloNumber> image = apply_matrix(g, v);
      if (!lines.count(line_key(image))) return false;
    }
  }
  return true;
}

std::vector<Polygon> search_polygons(unsigned p) {
  require_odd_prime(p);
  CycloMatrix sigma = make_sigma(p), tau = make_tau(p);
  std::vector<CycloMatrix> gens{sigma, tau};

  // Directions of the p+1 nontrivial cyclic subgroups of the projective
  // socle: (1,0), (0,1), (1,1), ..., (1,p-1).
  std::vector<std::pair<unsigned, unsigned>> directions{{1, 0}, {0, 1}};
  for (unsigned b = 1; b < p; ++b) directions.emplace_back(1, b);

  std::vector<Polygon> found;
  std::unordered_set<std::string> seen;
  for (auto [a, b] : directions) {
    CycloMatrix g = CycloMatrix::identity(p, p);
    for (unsigned i = 0; i < a; ++i) g = g * sigma;
    for (unsigned i = 0; i < b; ++i) g = g * tau;
    std::vector<std::vector<CycloNumber>> candidate;
    for (unsigned k = 0; k < p; ++k) {
      auto basis = eigenvectors(g, CycloNumber::zeta(p, k));
      for (auto& v : basis) candidate.push_back(std::move(v));
    }
    if (candidate.size() != p) continue;
    if (!is_polygon(candidate, gens)) continue;
    std::string key = polygon_key(candidate);
    if (seen.insert(key).second) {
      Polygon poly{"sigma^" + std::to_string(a) + " tau^" + std::to_string(b),
                   std::move(candidate)};
      found.push_back(std::move(poly));
    }
  }
  return found;
}

}  // namespace pglcat
