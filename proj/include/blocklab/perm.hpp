#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blocklab {

// Permutation of {0..n-1} (printed 1-based in cycle notation).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm from_cycles(const std::string& s, int n);  // "(1 2 3)(4 5)"

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int pt) const { return img[pt]; }
  Perm operator*(const Perm& o) const;  // (a*b)(x) = a(b(x))
  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  std::string cycles() const;

  auto operator<=>(const Perm&) const = default;
};

// Finite permutation group with eagerly enumerated elements (sorted).
// Subgroups share the parent's degree; containment is element containment.
struct PermGroup {
  int degree = 1;
  std::vector<Perm> gens;
  std::vector<Perm> elems;  // sorted, closed, contains identity

  static constexpr size_t kDefaultCap = 2000;

  static PermGroup enumerate(int degree, std::vector<Perm> generators,
                             size_t cap = kDefaultCap);
  static PermGroup from_elements(int degree, std::vector<Perm> elements);
  static PermGroup trivial(int degree);

  size_t order() const { return elems.size(); }
  bool contains(const Perm& g) const;
  int index_of(const Perm& g) const;  // -1 if absent
  bool is_subgroup_of(const PermGroup& G) const;
  bool is_normal_in(const PermGroup& G) const;
  unsigned exponent() const;
  bool is_abelian() const;
  bool is_p_group(unsigned p) const;
  bool same_group(const PermGroup& o) const { return degree == o.degree && elems == o.elems; }

  Perm mul(int i, int j) const { return elems[i] * elems[j]; }
};

// Homomorphism stored as a full element map, validated at construction.
struct GroupHom {
  PermGroup domain, codomain;
  std::vector<int> map;  // domain element index -> codomain element index
  bool injective = false;

  static GroupHom from_generator_images(const PermGroup& dom, const PermGroup& cod,
                                        const std::vector<Perm>& gen_images);
  static GroupHom from_images(const PermGroup& dom, const PermGroup& cod,
                              const std::vector<Perm>& elem_images);
  static GroupHom identity(const PermGroup& g);
  static GroupHom conjugation(const PermGroup& dom, const PermGroup& cod, const Perm& x);

  Perm apply(const Perm& g) const;
  GroupHom compose(const GroupHom& inner) const;  // this ∘ inner
  GroupHom inverse_iso() const;
  PermGroup image() const;
  bool operator==(const GroupHom& o) const;
};

struct QuotientGroup {
  PermGroup parent;
  PermGroup normal;
  std::vector<std::vector<int>> cosets;  // lists of parent element indices
  PermGroup group;                       // regular action on cosets
  std::vector<int> proj;                 // parent element index -> coset index
};

PermGroup generated_subgroup(const PermGroup& G, const std::vector<Perm>& gens);
PermGroup sylow(const PermGroup& G, unsigned p);
PermGroup o_p_residual(const PermGroup& G, unsigned p);
PermGroup commutator_subgroup(const PermGroup& G);
PermGroup centralizer(const PermGroup& G, const PermGroup& H);
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
PermGroup center(const PermGroup& G);
QuotientGroup quotient(const PermGroup& G, const PermGroup& N);

// Direct product on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& A, const PermGroup& B);
Perm pair_perm(const Perm& u, const Perm& v);
std::pair<Perm, Perm> split_perm(const Perm& g, int deg1, int deg2);

// {(u,v) : uN = vN} as a subgroup of G x G.
PermGroup bar_fiber_subgroup(const PermGroup& G, const PermGroup& N);
PermGroup delta_subgroup(const PermGroup& G);             // {(g,g)}
PermGroup delta_of_hom(const GroupHom& phi);              // {(phi(u), u)}

std::vector<PermGroup> all_subgroups(const PermGroup& G);
std::vector<PermGroup> subgroup_conjugacy_reps(const PermGroup& G,
                                               const std::vector<PermGroup>& subs);
bool conjugate_subgroups(const PermGroup& G, const PermGroup& A, const PermGroup& B,
                         Perm* witness = nullptr);
std::vector<Perm> left_transversal(const PermGroup& G, const PermGroup& H);

struct instance_too_large : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace blocklab
