#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwl {

// Error taxonomy shared across the library. Loaders and constructors throw
// `error`; the CLI maps codes to exit statuses.
enum class errc {
  bad_syntax,
  not_latin_square,
  no_identity,
  not_associative,
  size_limit,
  not_semisimple,
  not_in_socle,
  f_not_isomorphism,
  too_large,
  orders_differ,
  precondition,
  anchor_missing,
  isomorphic_inputs,
  budget_exceeded,
  no_witness,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

const char* errc_name(errc code);

// Hard caps for the two storage backends. Dense tables use 16-bit element
// ids; the larger cap admits Cayley tables written by `gen` for groups that
// were built on the permutation backend (e.g. order 7200).
inline constexpr int kDenseTableCap = 4096;
inline constexpr int kMaxGroupOrder = 16384;
inline constexpr int kMaxPermDegree = 255;

struct LoadReport {
  std::string validation;  // "full" | "sampled" | "trusted"
  bool relabeled = false;
  int identity_was = 0;  // original id of the identity element
};

// A finite group with identity-normalized element ids (identity is always 0).
//
// Backends:
//  - dense: row-major n x n multiplication table of 16-bit ids
//  - permutation: each element is a permutation of a base set, products are
//    computed by composition and resolved to ids through a hash index
//
// Immutable after construction; safe to share across threads.
class FiniteGroup {
 public:
  int order() const { return n_; }

  int mul(int a, int b) const {
    return dense_ ? table_[static_cast<size_t>(a) * n_ + b] : perm_mul(a, b);
  }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return elem_order_[a]; }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  bool is_dense() const { return dense_; }
  bool is_abelian() const;

  // Small generating set found by greedy ascending-id closure; cached.
  const std::vector<int>& small_gens() const { return small_gens_; }

  // Conjugacy classes: class id per element plus ascending representatives.
  const std::vector<int>& class_of() const { return class_of_; }
  const std::vector<int>& class_reps() const { return class_reps_; }

  // Construction -----------------------------------------------------------

  // Validates and takes ownership of a full multiplication table. `trusted`
  // skips the associativity scan (used by family constructors).
  static FiniteGroup from_table(int n, std::vector<uint16_t> table, bool trusted,
                                LoadReport* report = nullptr);

  // Closure of the given permutations of [0, degree). Element ids follow the
  // lexicographic order of the permutations, which puts the identity at 0.
  static FiniteGroup from_perm_generators(int degree, const std::vector<std::vector<uint8_t>>& gens);

  // Base-set permutation of an element; empty for dense groups.
  std::vector<uint8_t> perm_of(int a) const;
  int perm_degree() const { return degree_; }

  const LoadReport& load_report() const { return report_; }

 private:
  FiniteGroup() = default;
  static FiniteGroup from_perm_rows(int degree, std::vector<uint8_t> rows);
  void finalize();  // inverse table, element orders, gens, classes
  int perm_mul(int a, int b) const;
  int perm_index(const uint8_t* p) const;

  friend FiniteGroup relabel(const FiniteGroup&, const std::vector<int>&);

  int n_ = 0;
  bool dense_ = true;
  std::vector<uint16_t> table_;

  int degree_ = 0;
  std::vector<uint8_t> perms_;        // n_ * degree_, indexed by element id
  std::vector<uint64_t> packed_;      // id -> packed perm key (degree <= 16)
  std::vector<uint64_t> sorted_keys_; // packed keys in ascending order
  std::vector<int32_t> sorted_ids_;   // ids ordered by perm content

  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::vector<int> small_gens_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  LoadReport report_;
};

// Loaders / writers --------------------------------------------------------

FiniteGroup load_group(const std::string& text);
FiniteGroup load_group_file(const std::string& path);
std::string save_cay(const FiniteGroup& g);
std::vector<uint8_t> save_cayb(const FiniteGroup& g);
void save_group_file(const FiniteGroup& g, const std::string& path);

// Family constructors ------------------------------------------------------

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int order);  // order = 2n
FiniteGroup symmetric(int m);
FiniteGroup alternating(int m);
FiniteGroup quaternion8();

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup wreath_swap(const FiniteGroup& g);  // (G x G) : Z2 with the swap action
FiniteGroup relabel(const FiniteGroup& g, uint64_t seed);
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

}  // namespace gwl
