#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

/// A permutation of the ray labels {0, ..., n-1}; perm[i] is the image of i.
class RayPermutation {
 public:
  static RayPermutation make(std::vector<int> perm);
  static RayPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  int operator()(int ray) const { return perm_.at(static_cast<std::size_t>(ray)); }
  const std::vector<int>& images() const noexcept { return perm_; }

  /// "this, then next": i -> next(this(i)).
  RayPermutation then(const RayPermutation& next) const;
  RayPermutation inverse() const;

  friend bool operator==(const RayPermutation&, const RayPermutation&) = default;

 private:
  explicit RayPermutation(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

/// Same action on rays 0..n-1, identity on the added rays.
Element include_rays(const Element& e, int m);

/// Swaps (0,j) and (1,j) for every j <= k.
Element sigma_n(int rays, std::int64_t k);

/// The doubling embedding: (i,2k-1) -> (j,2m-1) and (i,2k) -> (j,2m)
/// whenever (i,k) e = (j,m).
Element cohopf_double(const Element& e);
/// The preimage under cohopf_double, if e is in the image.
std::optional<Element> is_in_double_image(const Element& e);

/// Conjugates e into the stabilizer of q through the order preserving
/// bijection of the rays onto the rays minus q.
Element stabilizer_embed(const Element& e, RayPoint q);

/// Relabels rays through r in both the source and target of e's action.
Element conj_by_ray_perm(const Element& e, const RayPermutation& r);

/// e * prod_i g(i,i+1)^{S_i} with S_i = t_0 + ... + t_i; always finitary.
Element translation_residue(const Element& e);

/// True iff U_p meets FSym exactly in FAlt, i.e. no finitary relator among
/// the g_i^p (their commutators and the cyclic product g_0^p ... g_{n-1}^p)
/// is odd. False for odd p when n >= 3, and also for n odd with p = 2 mod 4.
bool up_parity_restricted(int n, int p);

/// Membership in U_p: translations divisible by p and, when
/// up_parity_restricted(n, p), an even residue.
bool up_member(const Element& e, int p);

/// Number of states |H_n : U_p| can occupy, before enumeration.
std::int64_t up_state_bound(int n, int p);

/// |H_n : U_p| by enumerating cosets under the generator action. Coset
/// states are checked against up_member on sampled subgroup elements.
std::int64_t up_index(int n, int p, std::uint64_t seed = 1);

/// A pseudo-random element of U_p.
Element random_up_element(int n, int p, std::uint64_t seed);

RayPoint split_point(RayPoint x, int p);
RayPoint unsplit_point(RayPoint x, int p);

/// The image of e in H_{np} after splitting each ray into p interleaved rays.
/// Throws NotInUp unless up_member(e, p).
Element split_rays(const Element& e, int p);
/// Inverse of split_rays on elements with equal translations on the p rays
/// of each class.
Element unsplit_rays(const Element& e, int p);

/**
 * A commensuration datum: x -> (x base) relabeled through blocks, acting on
 * the split ray system R_{np}. blocks sends each class {ip, ..., ip+p-1} onto
 * a class.
 */
class NpElement {
 public:
  static NpElement make(int n, int p, Element base, std::vector<int> blocks);
  /// The action of e in H_n on the split ray system.
  static NpElement from_element(const Element& e, int p);

  /// Pure shift: the generator g(0, p) of H_{np} (a unit translation moving
  /// ray 0 towards ray 1), blocks trivial.
  static NpElement translate_archetype(int n, int p);
  /// Swaps the classes of rays 0 and 1, base trivial.
  static NpElement swap_archetype(int n, int p);
  /// Transposition of the two bottom points of ray 0, blocks trivial.
  static NpElement finitary_archetype(int n, int p);

  int rays() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  const Element& base() const noexcept { return base_; }
  const std::vector<int>& blocks() const noexcept { return blocks_; }

  /// Action on the split ray system, and its inverse.
  RayPoint apply_split(RayPoint x) const;
  RayPoint apply_split_inverse(RayPoint x) const;
  /// The same action read on R_n.
  RayPoint apply(RayPoint x) const;

  bool is_identity() const;
  bool blocks_trivial() const;

  friend bool operator==(const NpElement&, const NpElement&) = default;

 private:
  NpElement(int n, int p, Element base, std::vector<int> blocks)
      : n_(n), p_(p), base_(std::move(base)), blocks_(std::move(blocks)) {}

  int n_;
  int p_;
  Element base_;
  std::vector<int> blocks_;
};

enum class QiCase { kTranslatedRay, kRayPermuting, kFinitary };

std::string_view qi_case_name(QiCase c);

struct QiWitness {
  QiCase which;
  Element sigma;
  Element conjugate;    // sigma^phi
  Position certificate;  // P(sigma^{-1} sigma^phi)
};

/// sigma^phi for sigma in H_n. Finitary sigma works for every phi; other
/// sigma need phi to fix every split ray with trivial blocks.
Element conjugate_by(const Element& sigma, const NpElement& phi);

/// An element sigma whose distance to sigma^phi is at least N, certified by
/// the complexity of sigma^{-1} sigma^phi.
QiWitness qi_witness(const NpElement& phi, Position N);

}  // namespace houghton
