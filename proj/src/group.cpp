#include "gwl/group.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <charconv>
#include <cstring>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>

namespace gwl {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_syntax: return "BadSyntax";
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::no_identity: return "NoIdentity";
    case errc::not_associative: return "NotAssociative";
    case errc::size_limit: return "SizeLimit";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::not_in_socle: return "NotInSocle";
    case errc::f_not_isomorphism: return "FNotIsomorphism";
    case errc::too_large: return "TooLarge";
    case errc::orders_differ: return "OrdersDiffer";
    case errc::precondition: return "PreconditionViolated";
    case errc::anchor_missing: return "AnchorMissing";
    case errc::isomorphic_inputs: return "IsomorphicInputs";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::no_witness: return "NoWitness";
  }
  return "Unknown";
}

namespace {

// out = a o b, i.e. out[x] = a[b[x]]
void compose(const uint8_t* a, const uint8_t* b, uint8_t* out, int d) {
  for (int x = 0; x < d; ++x) out[x] = a[b[x]];
}

// Lexicographic-order-compatible packing for degree <= 16: point images in
// 4-bit nibbles, position 0 in the highest nibble.
uint64_t pack_hi(const uint8_t* p, int d) {
  uint64_t v = 0;
  for (int i = 0; i < d; ++i) v |= static_cast<uint64_t>(p[i]) << (4 * (15 - i));
  return v;
}

}  // namespace

int FiniteGroup::perm_index(const uint8_t* p) const {
  if (degree_ <= 16) {
    uint64_t key = pack_hi(p, degree_);
    auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), key);
    assert(it != sorted_keys_.end() && *it == key);
    return sorted_ids_[it - sorted_keys_.begin()];
  }
  int lo = 0, hi = n_;
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (std::memcmp(&perms_[static_cast<size_t>(sorted_ids_[mid]) * degree_], p, degree_) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return sorted_ids_[lo];
}

int FiniteGroup::perm_mul(int a, int b) const {
  uint8_t buf[256];
  compose(&perms_[static_cast<size_t>(a) * degree_], &perms_[static_cast<size_t>(b) * degree_], buf,
          degree_);
  return perm_index(buf);
}

std::vector<uint8_t> FiniteGroup::perm_of(int a) const {
  if (dense_) return {};
  auto begin = perms_.begin() + static_cast<size_t>(a) * degree_;
  return std::vector<uint8_t>(begin, begin + degree_);
}

bool FiniteGroup::is_abelian() const {
  for (size_t i = 0; i < small_gens_.size(); ++i)
    for (size_t j = i + 1; j < small_gens_.size(); ++j)
      if (!commute(small_gens_[i], small_gens_[j])) return false;
  return true;
}

void FiniteGroup::finalize() {
  inverse_.assign(n_, -1);
  if (dense_) {
    for (int a = 0; a < n_; ++a) {
      const uint16_t* row = &table_[static_cast<size_t>(a) * n_];
      for (int b = 0; b < n_; ++b)
        if (row[b] == 0) {
          inverse_[a] = b;
          break;
        }
    }
  } else {
    std::vector<uint8_t> invp(degree_);
    for (int a = 0; a < n_; ++a) {
      const uint8_t* p = &perms_[static_cast<size_t>(a) * degree_];
      for (int x = 0; x < degree_; ++x) invp[p[x]] = static_cast<uint8_t>(x);
      inverse_[a] = perm_index(invp.data());
    }
  }

  elem_order_.assign(n_, 0);
  elem_order_[0] = 1;
  for (int a = 1; a < n_; ++a) {
    int x = a, m = 1;
    while (x != 0) {
      x = mul(x, a);
      ++m;
    }
    elem_order_[a] = m;
  }

  // Greedy generating set: repeatedly adjoin the least element outside the
  // closure so far.
  std::vector<uint8_t> in(n_, 0);
  std::vector<int> members{0};
  in[0] = 1;
  small_gens_.clear();
  for (int g = 1; g < n_; ++g) {
    if (in[g]) continue;
    small_gens_.push_back(g);
    in[g] = 1;
    members.push_back(g);
    std::vector<int> frontier = members;  // re-expand everything against the enlarged set
    size_t head = 0;
    while (head < frontier.size()) {
      int x = frontier[head++];
      for (int s : small_gens_) {
        int y = mul(x, s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }

  class_of_.assign(n_, -1);
  class_reps_.clear();
  for (int g = 0; g < n_; ++g) {
    if (class_of_[g] >= 0) continue;
    int cid = static_cast<int>(class_reps_.size());
    class_reps_.push_back(g);
    class_of_[g] = cid;
    std::vector<int> frontier{g};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int s : small_gens_) {
        int y = conj(s, x);
        if (class_of_[y] < 0) {
          class_of_[y] = cid;
          frontier.push_back(y);
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<uint16_t> table, bool trusted,
                                    LoadReport* report) {
  if (n < 1 || n > kMaxGroupOrder)
    throw error(errc::size_limit, "group order " + std::to_string(n) + " outside [1, " +
                                      std::to_string(kMaxGroupOrder) + "]");
  if (table.size() != static_cast<size_t>(n) * n)
    throw error(errc::bad_syntax, "table size mismatch");

  // Latin square: every row and column is a permutation of [0, n).
  std::vector<uint8_t> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      uint16_t v = table[static_cast<size_t>(r) * n + c];
      if (v >= n) throw error(errc::bad_syntax, "entry out of range at row " + std::to_string(r));
      if (seen[v]++)
        throw error(errc::not_latin_square, "row " + std::to_string(r) + " repeats id " + std::to_string(v));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      uint16_t v = table[static_cast<size_t>(r) * n + c];
      if (seen[v]++)
        throw error(errc::not_latin_square, "column " + std::to_string(c) + " repeats id " + std::to_string(v));
    }
  }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[static_cast<size_t>(cand) * n + x] == x && table[static_cast<size_t>(x) * n + cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw error(errc::no_identity, "no two-sided identity element");

  LoadReport rep;
  rep.identity_was = e;
  if (e != 0) {
    // Relabel by the transposition (0 e) so the identity gets id 0.
    rep.relabeled = true;
    auto pi = [e](int x) { return x == 0 ? e : x == e ? 0 : x; };
    std::vector<uint16_t> relab(table.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relab[static_cast<size_t>(pi(a)) * n + pi(b)] =
            static_cast<uint16_t>(pi(table[static_cast<size_t>(a) * n + b]));
    table = std::move(relab);
  }

  // Two-sided inverses.
  for (int a = 0; a < n; ++a) {
    int b = -1;
    for (int c = 0; c < n; ++c)
      if (table[static_cast<size_t>(a) * n + c] == 0) {
        b = c;
        break;
      }
    if (b < 0 || table[static_cast<size_t>(b) * n + a] != 0)
      throw error(errc::not_associative, "element " + std::to_string(a) + " lacks a two-sided inverse");
  }

  auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  if (trusted) {
    rep.validation = "trusted";
  } else if (n <= 512) {
    rep.validation = "full";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = at(a, b);
        for (int c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw error(errc::not_associative,
                        "witness (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
  } else {
    rep.validation = "sampled";
    std::mt19937_64 rng(0x5eedULL ^ static_cast<uint64_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    int64_t samples = static_cast<int64_t>(10) * n * n;
    for (int64_t i = 0; i < samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw error(errc::not_associative,
                    "witness (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.dense_ = true;
  g.table_ = std::move(table);
  g.report_ = rep;
  g.finalize();
  if (report) *report = g.report_;
  return g;
}

FiniteGroup FiniteGroup::from_perm_generators(int degree,
                                              const std::vector<std::vector<uint8_t>>& gens) {
  if (degree < 1 || degree > kMaxPermDegree)
    throw error(errc::size_limit, "permutation degree " + std::to_string(degree) + " unsupported");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw error(errc::bad_syntax, "generator degree mismatch");
    std::vector<uint8_t> chk(degree, 0);
    for (uint8_t v : p) {
      if (v >= degree || chk[v]++) throw error(errc::bad_syntax, "generator is not a permutation");
    }
  }

  std::vector<uint8_t> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = static_cast<uint8_t>(i);

  // BFS closure over composition.
  std::vector<std::vector<uint8_t>> elems{identity};
  auto cmp_less = [degree](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    return std::memcmp(a.data(), b.data(), degree) < 0;
  };
  auto sorted = elems;  // kept sorted for dedupe
  size_t head = 0;
  std::vector<uint8_t> buf(degree);
  while (head < elems.size()) {
    auto cur = elems[head++];
    for (const auto& s : gens) {
      compose(cur.data(), s.data(), buf.data(), degree);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), buf, cmp_less);
      if (it == sorted.end() || std::memcmp(it->data(), buf.data(), degree) != 0) {
        sorted.insert(it, buf);
        elems.push_back(buf);
        if (elems.size() > static_cast<size_t>(kMaxGroupOrder))
          throw error(errc::size_limit, "generated group exceeds order cap");
      }
    }
  }

  std::vector<uint8_t> rows(sorted.size() * degree);
  for (size_t i = 0; i < sorted.size(); ++i)
    std::memcpy(&rows[i * degree], sorted[i].data(), degree);
  return from_perm_rows(degree, std::move(rows));
}

FiniteGroup FiniteGroup::from_perm_rows(int degree, std::vector<uint8_t> rows) {
  FiniteGroup g;
  g.n_ = static_cast<int>(rows.size() / degree);
  g.dense_ = false;
  g.degree_ = degree;
  g.perms_ = std::move(rows);
  g.sorted_ids_.resize(g.n_);
  for (int i = 0; i < g.n_; ++i) g.sorted_ids_[i] = i;
  std::sort(g.sorted_ids_.begin(), g.sorted_ids_.end(), [&](int a, int b) {
    return std::memcmp(&g.perms_[static_cast<size_t>(a) * degree], &g.perms_[static_cast<size_t>(b) * degree],
                       degree) < 0;
  });
  if (degree <= 16) {
    g.packed_.resize(g.n_);
    for (int i = 0; i < g.n_; ++i) g.packed_[i] = pack_hi(&g.perms_[static_cast<size_t>(i) * degree], degree);
    g.sorted_keys_.resize(g.n_);
    for (int i = 0; i < g.n_; ++i) g.sorted_keys_[i] = g.packed_[g.sorted_ids_[i]];
  }
  g.report_.validation = "trusted";
  g.finalize();
  return g;
}

// Loaders / writers ----------------------------------------------------------

FiniteGroup load_group(const std::string& text) {
  if (text.size() >= 4 && std::memcmp(text.data(), "CAY1", 4) == 0) {
    if (text.size() < 8) throw error(errc::bad_syntax, "truncated .cayb header");
    uint32_t n = 0;
    std::memcpy(&n, text.data() + 4, 4);
    if (n < 1 || n > static_cast<uint32_t>(kDenseTableCap))
      throw error(errc::size_limit, ".cayb order outside [1, 4096]");
    size_t need = 8 + static_cast<size_t>(n) * n * 2;
    if (text.size() != need) throw error(errc::bad_syntax, ".cayb payload size mismatch");
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    std::memcpy(table.data(), text.data() + 8, table.size() * 2);
    return FiniteGroup::from_table(static_cast<int>(n), std::move(table), false);
  }

  std::vector<int64_t> nums;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
      int64_t v = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, v);
      if (res.ec != std::errc() || res.ptr != text.data() + j)
        throw error(errc::bad_syntax, "bad token '" + text.substr(i, j - i) + "'");
      nums.push_back(v);
      i = j;
    }
  }
  if (nums.empty()) throw error(errc::bad_syntax, "empty input");
  int64_t n = nums[0];
  if (n < 1 || n > kMaxGroupOrder) throw error(errc::size_limit, "order outside [1, " + std::to_string(kMaxGroupOrder) + "]");
  if (static_cast<int64_t>(nums.size()) != 1 + n * n)
    throw error(errc::bad_syntax, "expected " + std::to_string(n * n) + " table entries, got " +
                                      std::to_string(nums.size() - 1));
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (size_t t = 0; t < table.size(); ++t) {
    int64_t v = nums[t + 1];
    if (v < 0 || v >= n) throw error(errc::bad_syntax, "entry " + std::to_string(v) + " out of range");
    table[t] = static_cast<uint16_t>(v);
  }
  return FiniteGroup::from_table(static_cast<int>(n), std::move(table), false);
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_syntax, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_group(ss.str());
}

std::string save_cay(const FiniteGroup& g) {
  std::string out;
  int n = g.order();
  out.reserve(static_cast<size_t>(n) * n * 5 + 16);
  out += std::to_string(n);
  out += '\n';
  char buf[8];
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto res = std::to_chars(buf, buf + sizeof buf, g.mul(a, b));
      if (b) out += ' ';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

std::vector<uint8_t> save_cayb(const FiniteGroup& g) {
  int n = g.order();
  if (n > kDenseTableCap)
    throw error(errc::size_limit, ".cayb only supports order <= " + std::to_string(kDenseTableCap) +
                                      " (group has order " + std::to_string(n) + "); use .cay");
  std::vector<uint8_t> out(8 + static_cast<size_t>(n) * n * 2);
  std::memcpy(out.data(), "CAY1", 4);
  uint32_t n32 = static_cast<uint32_t>(n);
  std::memcpy(out.data() + 4, &n32, 4);
  size_t off = 8;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      uint16_t v = static_cast<uint16_t>(g.mul(a, b));
      std::memcpy(out.data() + off, &v, 2);
      off += 2;
    }
  return out;
}

void save_group_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::bad_syntax, "cannot write " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".cayb") {
    auto bytes = save_cayb(g);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  } else {
    out << save_cay(g);
  }
}

// Families -------------------------------------------------------------------

FiniteGroup cyclic(int n) {
  if (n < 1 || n > kDenseTableCap) throw error(errc::size_limit, "cyclic order outside [1, 4096]");
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(table), true);
}

FiniteGroup dihedral(int order) {
  if (order < 2 || order % 2 || order > kDenseTableCap)
    throw error(errc::size_limit, "dihedral order must be even, in [2, 4096]");
  int n = order / 2;
  if (n == 1) return cyclic(2);
  // ids: rotations 0..n-1, reflections n..2n-1
  auto mulf = [n](int x, int y) {
    bool rx = x >= n, ry = y >= n;
    int a = rx ? x - n : x, b = ry ? y - n : y;
    if (!rx && !ry) return (a + b) % n;
    if (!rx && ry) return n + (b + a) % n;
    if (rx && !ry) return n + (a - b + n) % n;
    return (a - b + n) % n;
  };
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) table[static_cast<size_t>(x) * order + y] = static_cast<uint16_t>(mulf(x, y));
  return FiniteGroup::from_table(order, std::move(table), false);  // cheap orders: validate fully
}

FiniteGroup symmetric(int m) {
  if (m < 1) throw error(errc::size_limit, "symmetric degree must be >= 1");
  int64_t ord = 1;
  for (int i = 2; i <= m; ++i) ord *= i;
  if (ord > kMaxGroupOrder) throw error(errc::size_limit, "symmetric(" + std::to_string(m) + ") exceeds order cap");
  std::vector<std::vector<uint8_t>> gens;
  int d = std::max(m, 1);
  if (m >= 2) {
    std::vector<uint8_t> t(d), c(d);
    for (int i = 0; i < d; ++i) t[i] = c[i] = static_cast<uint8_t>(i);
    std::swap(t[0], t[1]);
    for (int i = 0; i < m; ++i) c[i] = static_cast<uint8_t>((i + 1) % m);
    gens = {t, c};
  }
  FiniteGroup out = FiniteGroup::from_perm_generators(d, gens);
  if (out.order() != ord) throw error(errc::size_limit, "symmetric construction order mismatch");
  return out;
}

FiniteGroup alternating(int m) {
  if (m < 1) throw error(errc::size_limit, "alternating degree must be >= 1");
  int64_t ord = 1;
  for (int i = 2; i <= m; ++i) ord *= i;
  ord = m >= 2 ? ord / 2 : 1;
  if (ord > kMaxGroupOrder) throw error(errc::size_limit, "alternating(" + std::to_string(m) + ") exceeds order cap");
  int d = std::max(m, 1);
  std::vector<std::vector<uint8_t>> gens;
  if (m >= 3) {
    std::vector<uint8_t> t3(d);
    for (int i = 0; i < d; ++i) t3[i] = static_cast<uint8_t>(i);
    t3[0] = 1; t3[1] = 2; t3[2] = 0;
    gens.push_back(t3);
    if (m > 3) {
      std::vector<uint8_t> c(d);
      for (int i = 0; i < d; ++i) c[i] = static_cast<uint8_t>(i);
      if (m % 2 == 1) {
        for (int i = 0; i < m; ++i) c[i] = static_cast<uint8_t>((i + 1) % m);
      } else {
        for (int i = 1; i < m; ++i) c[i] = static_cast<uint8_t>(i % (m - 1) + 1);
      }
      gens.push_back(c);
    }
  }
  FiniteGroup out = FiniteGroup::from_perm_generators(d, gens);
  if (out.order() != ord) throw error(errc::size_limit, "alternating construction order mismatch");
  return out;
}

FiniteGroup quaternion8() {
  // ids: 1, -1, i, -i, j, -j, k, -k
  auto enc = [](int unit, bool neg) { return unit * 2 + (neg ? 1 : 0); };
  auto mulq = [&](int x, int y) {
    int ux = x / 2, uy = y / 2;
    bool nx = x & 1, ny = y & 1;
    // unit table on {1,i,j,k} with sign
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const bool sign[4][4] = {{false, false, false, false},
                                    {false, true, false, true},
                                    {false, true, true, false},
                                    {false, false, true, true}};
    // sign[a][b] = product of unit a,b carries a minus (i*i=-1, i*j=k, j*i=-k, ...)
    return enc(unit[ux][uy], sign[ux][uy] ^ nx ^ ny);
  };
  std::vector<uint16_t> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) table[static_cast<size_t>(x) * 8 + y] = static_cast<uint16_t>(mulq(x, y));
  return FiniteGroup::from_table(8, std::move(table), false);
}

namespace {

// Permutation realization of a group for product constructions: native for
// the permutation backend, regular representation for dense groups.
struct PermRealization {
  int degree;
  std::vector<std::vector<uint8_t>> gens;  // images of g.small_gens()
};

PermRealization realize(const FiniteGroup& g) {
  PermRealization out;
  if (!g.is_dense()) {
    out.degree = g.perm_degree();
    for (int s : g.small_gens()) out.gens.push_back(g.perm_of(s));
    return out;
  }
  int n = g.order();
  if (n > kMaxPermDegree)
    throw error(errc::size_limit, "dense operand of order " + std::to_string(n) +
                                      " cannot be realized as permutations (degree cap)");
  out.degree = n;
  for (int s : g.small_gens()) {
    std::vector<uint8_t> p(n);
    for (int x = 0; x < n; ++x) p[x] = static_cast<uint8_t>(g.mul(s, x));
    out.gens.push_back(std::move(p));
  }
  return out;
}

std::vector<uint8_t> embed_block(const std::vector<uint8_t>& p, int offset, int total) {
  std::vector<uint8_t> out(total);
  for (int i = 0; i < total; ++i) out[i] = static_cast<uint8_t>(i);
  for (size_t i = 0; i < p.size(); ++i) out[offset + i] = static_cast<uint8_t>(offset + p[i]);
  return out;
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int64_t ord = static_cast<int64_t>(g.order()) * h.order();
  if (ord > kMaxGroupOrder)
    throw error(errc::size_limit, "product order " + std::to_string(ord) + " exceeds cap " +
                                      std::to_string(kMaxGroupOrder));
  int ng = g.order(), nh = h.order(), n = static_cast<int>(ord);
  if (n <= kDenseTableCap) {
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < ng; ++a1)
      for (int b1 = 0; b1 < nh; ++b1)
        for (int a2 = 0; a2 < ng; ++a2)
          for (int b2 = 0; b2 < nh; ++b2)
            table[static_cast<size_t>(a1 * nh + b1) * n + (a2 * nh + b2)] =
                static_cast<uint16_t>(g.mul(a1, a2) * nh + h.mul(b1, b2));
    return FiniteGroup::from_table(n, std::move(table), true);
  }
  PermRealization rg = realize(g), rh = realize(h);
  int total = rg.degree + rh.degree;
  if (total > kMaxPermDegree) throw error(errc::size_limit, "product permutation degree exceeds cap");
  std::vector<std::vector<uint8_t>> gens;
  for (const auto& p : rg.gens) gens.push_back(embed_block(p, 0, total));
  for (const auto& p : rh.gens) gens.push_back(embed_block(p, rg.degree, total));
  FiniteGroup out = FiniteGroup::from_perm_generators(total, gens);
  if (out.order() != n) throw error(errc::size_limit, "product construction order mismatch");
  return out;
}

FiniteGroup wreath_swap(const FiniteGroup& g) {
  int64_t ord = 2 * static_cast<int64_t>(g.order()) * g.order();
  if (ord > kMaxGroupOrder)
    throw error(errc::size_limit, "wreath order " + std::to_string(ord) + " exceeds cap");
  PermRealization rg = realize(g);
  int d = rg.degree, total = 2 * d;
  if (total > kMaxPermDegree) throw error(errc::size_limit, "wreath permutation degree exceeds cap");
  std::vector<std::vector<uint8_t>> gens;
  for (const auto& p : rg.gens) {
    gens.push_back(embed_block(p, 0, total));
    gens.push_back(embed_block(p, d, total));
  }
  std::vector<uint8_t> swap_blocks(total);
  for (int i = 0; i < d; ++i) {
    swap_blocks[i] = static_cast<uint8_t>(i + d);
    swap_blocks[i + d] = static_cast<uint8_t>(i);
  }
  gens.push_back(swap_blocks);
  FiniteGroup out = FiniteGroup::from_perm_generators(total, gens);
  if (out.order() != ord) throw error(errc::size_limit, "wreath construction order mismatch");
  return out;
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw error(errc::bad_syntax, "relabel permutation size mismatch");
  std::vector<uint8_t> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]++) throw error(errc::bad_syntax, "relabel map is not a permutation");
  }
  // Re-normalize so the identity keeps id 0.
  std::vector<int> pi = perm;
  if (pi[0] != 0) {
    int e = pi[0];
    for (int& v : pi) v = v == 0 ? e : v == e ? 0 : v;
  }
  if (n <= kDenseTableCap) {
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table[static_cast<size_t>(pi[a]) * n + pi[b]] = static_cast<uint16_t>(pi[g.mul(a, b)]);
    return FiniteGroup::from_table(n, std::move(table), true);
  }

  // Above the table cap: permute the permutation backend's id assignment
  // instead of materializing a table.
  if (g.is_dense()) {
    // Loaded oversize tables are relabeled row-by-row through the same path a
    // fresh load would take; this needs another full table, which the order
    // cap keeps affordable.
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table[static_cast<size_t>(pi[a]) * n + pi[b]] = static_cast<uint16_t>(pi[g.mul(a, b)]);
    return FiniteGroup::from_table(n, std::move(table), true);
  }
  int d = g.perm_degree();
  std::vector<uint8_t> rows(static_cast<size_t>(n) * d);
  for (int a = 0; a < n; ++a) {
    auto p = g.perm_of(a);
    std::memcpy(&rows[static_cast<size_t>(pi[a]) * d], p.data(), d);
  }
  return FiniteGroup::from_perm_rows(d, std::move(rows));
}

FiniteGroup relabel(const FiniteGroup& g, uint64_t seed) {
  int n = g.order();
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i >= 2; --i) {
    std::uniform_int_distribution<int> pick(1, i);
    std::swap(pi[i], pi[pick(rng)]);
  }
  return relabel(g, pi);
}

}  // namespace gwl
