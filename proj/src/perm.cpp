#include "blocklab/perm.hpp"

#include "blocklab/gf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blocklab {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.img = std::move(v);
  return p;
}

Perm Perm::from_cycles(const std::string& s, int n) {
  Perm p = identity(n);
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] != '(') ++i;
    if (i == s.size()) break;
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < s.size() && s[i] != ')'; ++i) {
      if (isdigit(static_cast<unsigned char>(s[i]))) {
        num += s[i];
      } else if (!num.empty()) {
        cyc.push_back(std::stoi(num) - 1);
        num.clear();
      }
    }
    if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
    ++i;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      p.img[a] = b;
    }
  }
  return Perm(p.img);  // validates
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
  Perm r;
  r.img.resize(img.size());
  for (int x = 0; x < degree(); ++x) r.img[x] = img[o.img[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int x = 0; x < degree(); ++x) r.img[img[x]] = x;
  return r;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img[x] != x) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int o = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++o;
  }
  return o;
}

std::string Perm::cycles() const {
  std::vector<char> seen(img.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img[x] == x) continue;
    out << '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out << ' ';
      out << (y + 1);
      first = false;
      y = img[y];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

PermGroup PermGroup::enumerate(int degree, std::vector<Perm> generators, size_t cap) {
  for (auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("enumerate: degree mismatch");
  std::set<Perm> closure{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm y = x * g;
        if (closure.insert(y).second) {
          if (closure.size() > cap)
            throw instance_too_large("group enumeration exceeds cap " + std::to_string(cap));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  PermGroup G;
  G.degree = degree;
  G.gens = std::move(generators);
  G.elems.assign(closure.begin(), closure.end());
  return G;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup G;
  G.degree = degree;
  G.elems = std::move(elements);
  if (G.elems.empty() || !std::binary_search(G.elems.begin(), G.elems.end(), Perm::identity(degree)))
    throw std::invalid_argument("from_elements: missing identity");
  for (const auto& a : G.elems) {
    if (!G.contains(a.inverse())) throw std::invalid_argument("from_elements: not closed");
  }
  // closure under multiplication (spot products against generators would not
  // be exhaustive, these sets are tiny so check all pairs)
  for (const auto& a : G.elems)
    for (const auto& b : G.elems)
      if (!G.contains(a * b)) throw std::invalid_argument("from_elements: not closed");
  G.gens = G.elems;
  return G;
}

PermGroup PermGroup::trivial(int degree) {
  PermGroup G;
  G.degree = degree;
  G.elems = {Perm::identity(degree)};
  return G;
}

bool PermGroup::contains(const Perm& g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

int PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  if (it == elems.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elems.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
  if (degree != G.degree) return false;
  for (const auto& g : elems)
    if (!G.contains(g)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& G) const {
  if (!is_subgroup_of(G)) return false;
  for (const auto& x : G.elems)
    for (const auto& h : elems)
      if (!contains(x * h * x.inverse())) return false;
  return true;
}

unsigned PermGroup::exponent() const {
  unsigned e = 1;
  for (const auto& g : elems) e = std::lcm(e, static_cast<unsigned>(g.order()));
  return e;
}

bool PermGroup::is_abelian() const {
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (!(a * b == b * a)) return false;
  return true;
}

bool PermGroup::is_p_group(unsigned p) const {
  size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

PermGroup generated_subgroup(const PermGroup& G, const std::vector<Perm>& gens) {
  for (const auto& g : gens)
    if (!G.contains(g)) throw std::invalid_argument("generated_subgroup: generator outside G");
  return PermGroup::enumerate(G.degree, gens, G.order());
}

PermGroup sylow(const PermGroup& G, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: p not prime");
  size_t target = 1, n = G.order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  if (target == 1) return PermGroup::trivial(G.degree);
  // grow a p-subgroup greedily: maximal p-subgroups are exactly the Sylows
  PermGroup P = PermGroup::trivial(G.degree);
  while (P.order() < target) {
    bool grown = false;
    for (const auto& g : G.elems) {
      unsigned o = static_cast<unsigned>(g.order());
      bool ppower = true;
      while (o % p == 0) o /= p;
      ppower = (o == 1);
      if (!ppower || P.contains(g)) continue;
      // g must normalize-compatibly extend P to a p-group
      auto gens = P.gens;
      gens.push_back(g);
      PermGroup Q;
      try {
        Q = PermGroup::enumerate(G.degree, gens, target);
      } catch (const instance_too_large&) {
        continue;
      }
      if (Q.is_p_group(p) && Q.order() > P.order()) {
        P = Q;
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  if (P.order() != target) throw std::logic_error("sylow: failed to reach full p-part");
  return P;
}

PermGroup o_p_residual(const PermGroup& G, unsigned p) {
  std::vector<Perm> gens;
  for (const auto& g : G.elems)
    if (g.order() % p != 0) gens.push_back(g);
  return PermGroup::enumerate(G.degree, gens, G.order());
}

PermGroup commutator_subgroup(const PermGroup& G) {
  std::vector<Perm> gens;
  for (const auto& a : G.elems)
    for (const auto& b : G.elems)
      gens.push_back(a.inverse() * b.inverse() * a * b);
  return PermGroup::enumerate(G.degree, gens, G.order());
}

PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw std::invalid_argument("centralizer: H not a subgroup of G");
  std::vector<Perm> out;
  for (const auto& x : G.elems) {
    bool ok = true;
    for (const auto& h : H.gens)
      if (!(x * h == h * x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return PermGroup::from_elements(G.degree, out);
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw std::invalid_argument("normalizer: H not a subgroup of G");
  std::vector<Perm> out;
  for (const auto& x : G.elems) {
    bool ok = true;
    for (const auto& h : H.elems)
      if (!H.contains(x * h * x.inverse())) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return PermGroup::from_elements(G.degree, out);
}

PermGroup center(const PermGroup& G) { return centralizer(G, G); }

QuotientGroup quotient(const PermGroup& G, const PermGroup& N) {
  if (!N.is_normal_in(G)) throw std::invalid_argument("quotient: N not normal in G");
  QuotientGroup Q;
  Q.parent = G;
  Q.normal = N;
  Q.proj.assign(G.order(), -1);
  for (size_t i = 0; i < G.order(); ++i) {
    if (Q.proj[i] >= 0) continue;
    int c = static_cast<int>(Q.cosets.size());
    std::vector<int> coset;
    for (const auto& n : N.elems) {
      int j = G.index_of(G.elems[i] * n);
      Q.proj[j] = c;
      coset.push_back(j);
    }
    std::sort(coset.begin(), coset.end());
    Q.cosets.push_back(std::move(coset));
  }
  // regular action of G on cosets, realized on coset indices
  int nc = static_cast<int>(Q.cosets.size());
  std::set<Perm> qelems;
  for (const auto& g : G.elems) {
    std::vector<int> img(nc);
    for (int c = 0; c < nc; ++c)
      img[c] = Q.proj[G.index_of(g * G.elems[Q.cosets[c][0]])];
    qelems.insert(Perm(img));
  }
  Q.group.degree = nc;
  Q.group.elems.assign(qelems.begin(), qelems.end());
  Q.group.gens = Q.group.elems;
  return Q;
}

Perm pair_perm(const Perm& u, const Perm& v) {
  std::vector<int> img(u.degree() + v.degree());
  for (int x = 0; x < u.degree(); ++x) img[x] = u(x);
  for (int x = 0; x < v.degree(); ++x) img[u.degree() + x] = u.degree() + v(x);
  return Perm(img);
}

std::pair<Perm, Perm> split_perm(const Perm& g, int deg1, int deg2) {
  std::vector<int> a(deg1), b(deg2);
  for (int x = 0; x < deg1; ++x) a[x] = g(x);
  for (int x = 0; x < deg2; ++x) b[x] = g(deg1 + x) - deg1;
  return {Perm(a), Perm(b)};
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  std::vector<Perm> elems;
  elems.reserve(A.order() * B.order());
  for (const auto& u : A.elems)
    for (const auto& v : B.elems) elems.push_back(pair_perm(u, v));
  return PermGroup::from_elements(A.degree + B.degree, std::move(elems));
}

PermGroup bar_fiber_subgroup(const PermGroup& G, const PermGroup& N) {
  if (!N.is_normal_in(G)) throw std::invalid_argument("bar_fiber_subgroup: N not normal");
  QuotientGroup Q = quotient(G, N);
  std::vector<Perm> elems;
  for (size_t i = 0; i < G.order(); ++i)
    for (size_t j = 0; j < G.order(); ++j)
      if (Q.proj[i] == Q.proj[j]) elems.push_back(pair_perm(G.elems[i], G.elems[j]));
  return PermGroup::from_elements(2 * G.degree, std::move(elems));
}

PermGroup delta_subgroup(const PermGroup& G) {
  std::vector<Perm> elems;
  for (const auto& g : G.elems) elems.push_back(pair_perm(g, g));
  return PermGroup::from_elements(2 * G.degree, std::move(elems));
}

GroupHom GroupHom::from_images(const PermGroup& dom, const PermGroup& cod,
                               const std::vector<Perm>& elem_images) {
  if (elem_images.size() != dom.order())
    throw std::invalid_argument("GroupHom: image list size mismatch");
  GroupHom h;
  h.domain = dom;
  h.codomain = cod;
  h.map.resize(dom.order());
  for (size_t i = 0; i < dom.order(); ++i) {
    int idx = cod.index_of(elem_images[i]);
    if (idx < 0) throw std::invalid_argument("GroupHom: image outside codomain");
    h.map[i] = idx;
  }
  // multiplicativity on all pairs
  for (size_t i = 0; i < dom.order(); ++i)
    for (size_t j = 0; j < dom.order(); ++j) {
      int k = dom.index_of(dom.elems[i] * dom.elems[j]);
      if (!(cod.elems[h.map[i]] * cod.elems[h.map[j]] == cod.elems[h.map[k]]))
        throw std::invalid_argument("GroupHom: not a homomorphism");
    }
  std::set<int> im(h.map.begin(), h.map.end());
  h.injective = im.size() == dom.order();
  return h;
}

GroupHom GroupHom::from_generator_images(const PermGroup& dom, const PermGroup& cod,
                                         const std::vector<Perm>& gen_images) {
  if (gen_images.size() != dom.gens.size())
    throw std::invalid_argument("GroupHom: generator image count mismatch");
  // close the partial map over products; conflicts mean no such homomorphism
  std::vector<Perm> image(dom.order());
  std::vector<char> known(dom.order(), 0);
  int id = dom.index_of(Perm::identity(dom.degree));
  image[id] = Perm::identity(cod.degree);
  known[id] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < dom.order(); ++i) {
      if (!known[i]) continue;
      for (size_t gi = 0; gi < dom.gens.size(); ++gi) {
        int j = dom.index_of(dom.elems[i] * dom.gens[gi]);
        Perm cand = image[i] * gen_images[gi];
        if (!known[j]) {
          image[j] = cand;
          known[j] = 1;
          changed = true;
        } else if (!(image[j] == cand)) {
          throw std::invalid_argument("GroupHom: generator images violate relations");
        }
      }
    }
  }
  for (char k : known)
    if (!k) throw std::invalid_argument("GroupHom: generators do not generate domain");
  return from_images(dom, cod, image);
}

GroupHom GroupHom::identity(const PermGroup& g) {
  return from_images(g, g, g.elems);
}

GroupHom GroupHom::conjugation(const PermGroup& dom, const PermGroup& cod, const Perm& x) {
  std::vector<Perm> image;
  image.reserve(dom.order());
  for (const auto& u : dom.elems) image.push_back(x * u * x.inverse());
  return from_images(dom, cod, image);
}

Perm GroupHom::apply(const Perm& g) const {
  int i = domain.index_of(g);
  if (i < 0) throw std::invalid_argument("GroupHom::apply: element outside domain");
  return codomain.elems[map[i]];
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  std::vector<Perm> image;
  image.reserve(inner.domain.order());
  for (size_t i = 0; i < inner.domain.order(); ++i)
    image.push_back(apply(inner.codomain.elems[inner.map[i]]));
  return from_images(inner.domain, codomain, image);
}

GroupHom GroupHom::inverse_iso() const {
  if (!injective) throw std::invalid_argument("inverse_iso: not injective");
  PermGroup im = image();
  std::vector<Perm> inv_images(im.order());
  for (size_t i = 0; i < domain.order(); ++i)
    inv_images[im.index_of(codomain.elems[map[i]])] = domain.elems[i];
  return from_images(im, domain, inv_images);
}

PermGroup GroupHom::image() const {
  std::vector<Perm> im;
  for (int idx : map) im.push_back(codomain.elems[idx]);
  return PermGroup::from_elements(codomain.degree, im);
}

bool GroupHom::operator==(const GroupHom& o) const {
  return domain.same_group(o.domain) && codomain.degree == o.codomain.degree && [&] {
    for (size_t i = 0; i < domain.order(); ++i)
      if (!(codomain.elems[map[i]] == o.codomain.elems[o.map[i]])) return false;
    return true;
  }();
}

PermGroup delta_of_hom(const GroupHom& phi) {
  if (!phi.injective) throw std::invalid_argument("delta_of_hom: phi not injective");
  if (phi.domain.degree != phi.codomain.degree)
    throw std::invalid_argument("delta_of_hom: domain/codomain live in different parents");
  std::vector<Perm> elems;
  for (size_t i = 0; i < phi.domain.order(); ++i)
    elems.push_back(pair_perm(phi.codomain.elems[phi.map[i]], phi.domain.elems[i]));
  return PermGroup::from_elements(2 * phi.domain.degree, std::move(elems));
}

std::vector<PermGroup> all_subgroups(const PermGroup& G) {
  // BFS over generated subgroups, dedup by element set
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  std::vector<PermGroup> frontier{PermGroup::trivial(G.degree)};
  seen.insert(frontier[0].elems);
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const auto& H : frontier)
      for (const auto& g : G.elems) {
        if (H.contains(g)) continue;
        auto gens = H.gens;
        gens.push_back(g);
        PermGroup K = PermGroup::enumerate(G.degree, gens, G.order());
        if (seen.insert(K.elems).second) {
          out.push_back(K);
          next.push_back(K);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elems < b.elems;
            });
  return out;
}

bool conjugate_subgroups(const PermGroup& G, const PermGroup& A, const PermGroup& B,
                         Perm* witness) {
  if (A.order() != B.order()) return false;
  for (const auto& x : G.elems) {
    bool ok = true;
    for (const auto& a : A.elems)
      if (!B.contains(x * a * x.inverse())) {
        ok = false;
        break;
      }
    if (ok) {
      if (witness) *witness = x;
      return true;
    }
  }
  return false;
}

std::vector<PermGroup> subgroup_conjugacy_reps(const PermGroup& G,
                                               const std::vector<PermGroup>& subs) {
  std::vector<PermGroup> reps;
  for (const auto& H : subs) {
    bool found = false;
    for (const auto& R : reps)
      if (conjugate_subgroups(G, H, R)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(H);
  }
  return reps;
}

std::vector<Perm> left_transversal(const PermGroup& G, const PermGroup& H) {
  std::vector<Perm> reps;
  std::set<Perm> covered;
  for (const auto& g : G.elems) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : H.elems) covered.insert(g * h);
  }
  return reps;
}

}  // namespace blocklab
