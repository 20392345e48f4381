#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gwl/group.hpp"
#include "gwl/subgroup.hpp"

namespace gwl {

// Marked-isomorphism machinery -----------------------------------------------
//
// The canonical closure table of a tuple: breadth-first closure of the tuple
// seeds (seed order = tuple order, expansion = existing elements times seeds
// in discovery order), elements renamed by discovery index. Two tuples have
// equal certificates iff x_i -> y_i extends to an isomorphism of the
// generated subgroups.
std::string marked_type_cert(const FiniteGroup& g, std::span<const int> tuple);

// Lockstep variant that compares two tuples directly without materializing
// certificates; also returns the witnessing partial isomorphism on demand.
bool marked_iso(const FiniteGroup& g, std::span<const int> gt, const FiniteGroup& h,
                std::span<const int> ht);

// Structure types -------------------------------------------------------------

struct SocleFactor {
  SubgroupSet set;
  int x = 0, y = 0;         // deterministic generator pair: first in lex order
  std::string marked_type;  // closure-table certificate of (x, y)
};

struct SocleDecomposition {
  SubgroupSet socle;
  std::vector<SocleFactor> factors;
  std::vector<int> factor_of;     // group element -> factor index (weight-1 socle elements), else -1
  std::vector<int> socle_index;   // group element -> index into socle.elems, else -1
  std::vector<int8_t> weights;    // by socle index
  std::vector<int> components;    // by socle index: k components (flattened)

  int num_factors() const { return static_cast<int>(factors.size()); }
  int weight_of(int elem) const { return weights[socle_index[elem]]; }
  std::span<const int> components_of(int elem) const {
    return {components.data() + static_cast<size_t>(socle_index[elem]) * factors.size(),
            factors.size()};
  }
};

// Conjugation action of G on its socle: sigma_g is the restriction of
// conjugation by g to socle elements (as a permutation of socle indices), and
// the induced permutation of the factor indices.
struct ConjugationAction {
  const FiniteGroup* group = nullptr;
  const SocleDecomposition* dec = nullptr;

  std::vector<int> sigma(int g) const;        // socle index -> socle index
  std::vector<int> factor_perm(int g) const;  // factor index -> factor index
};

// Operations ------------------------------------------------------------------

SubgroupSet socle(const FiniteGroup& g);
bool is_semisimple(const FiniteGroup& g);

SocleDecomposition socle_factors(const FiniteGroup& g);

std::vector<int> decompose_socle_element(const FiniteGroup& g, const SocleDecomposition& dec, int s);
int weight(const FiniteGroup& g, const SocleDecomposition& dec, int s);

ConjugationAction conj_action(const FiniteGroup& g, const SocleDecomposition& dec);
std::vector<int> factor_permutation(const FiniteGroup& g, const SocleDecomposition& dec, int elem);

SubgroupSet pker(const FiniteGroup& g, const SocleDecomposition& dec);

// Lemma 4.2 predicate: N equals the internal direct product of its own
// minimal normal subgroups, all of which are nonabelian simple.
bool is_dp_of_nonabelian_simples(const FiniteGroup& g, const SubgroupSet& n);

// Permutational-isomorphism extension ----------------------------------------

// Precomputed index of sigma_h keyed by the images of the socle generators;
// shared across many extension attempts against the same H.
struct SigmaIndex {
  std::vector<int> gen_elems;  // socle generators of H's decomposition (x_j, y_j)
  std::unordered_map<std::string, int> by_key;
};

SigmaIndex build_sigma_index(const FiniteGroup& h, const SocleDecomposition& dec_h);

// A bijection or partial map on element ids; -1 marks undefined entries.
using ElementMap = std::vector<int>;

struct ExtendResult {
  std::optional<ElementMap> iso;  // full isomorphism G -> H when it exists
  int witness = -1;               // g with no compatible sigma image, when it doesn't
};

// Given an isomorphism f : Soc(G) -> Soc(H) (defined on socle elements,
// -1 elsewhere), decide whether it extends to an isomorphism G -> H mapping
// g to the unique h with sigma_h = f sigma_g f^-1. `verify_f` rechecks the
// precondition and throws FNotIsomorphism on violation.
ExtendResult extend_socle_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                      const SocleDecomposition& dec_g, const SocleDecomposition& dec_h,
                                      const ElementMap& f, bool verify_f = true,
                                      const SigmaIndex* index = nullptr);

// Full isomorphism search for semisimple groups: enumerate factor matchings
// and per-factor generator images (pruned by element order and marked type),
// assemble socle isomorphisms, and try to extend each. Deterministic
// enumeration order; returns the first success.
std::optional<ElementMap> semisimple_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

// Runs the same enumeration to completion and counts the socle isomorphisms
// that extend (|Aut| bookkeeping for test oracles).
long count_extending_socle_isomorphisms(const FiniteGroup& g, const FiniteGroup& h);

// Independent oracle: brute-force generator-image isomorphism search.
std::optional<ElementMap> brute_force_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                  int max_order = 120);

}  // namespace gwl
