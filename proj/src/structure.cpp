#include "gwl/structure.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace gwl {

// Marked isomorphism ----------------------------------------------------------

namespace {

// Lockstep closure of two seeded tuples. Returns false on any inconsistency;
// on success *map_out (if given) receives the partial isomorphism as pairs of
// discovered elements.
bool lockstep(const FiniteGroup& g, std::span<const int> gt, const FiniteGroup& h,
              std::span<const int> ht, std::vector<int>* dg_out = nullptr,
              std::vector<int>* dh_out = nullptr) {
  assert(gt.size() == ht.size());
  std::vector<int> idx_g(g.order(), -1), idx_h(h.order(), -1);
  std::vector<int> dg, dh;
  auto push = [&](int a, int b) -> bool {
    int ia = idx_g[a], ib = idx_h[b];
    if (ia != ib) return false;
    if (ia == -1) {
      idx_g[a] = idx_h[b] = static_cast<int>(dg.size());
      dg.push_back(a);
      dh.push_back(b);
    }
    return true;
  };
  for (size_t i = 0; i < gt.size(); ++i)
    if (!push(gt[i], ht[i])) return false;
  for (size_t t = 0; t < dg.size(); ++t)
    for (size_t s = 0; s < gt.size(); ++s)
      if (!push(g.mul(dg[t], gt[s]), h.mul(dh[t], ht[s]))) return false;
  if (dg_out) *dg_out = std::move(dg);
  if (dh_out) *dh_out = std::move(dh);
  return true;
}

}  // namespace

bool marked_iso(const FiniteGroup& g, std::span<const int> gt, const FiniteGroup& h,
                std::span<const int> ht) {
  return lockstep(g, gt, h, ht);
}

std::string marked_type_cert(const FiniteGroup& g, std::span<const int> tuple) {
  std::vector<int> idx(g.order(), -1);
  std::vector<int> disc;
  std::vector<uint32_t> seed_idx;
  for (int s : tuple) {
    if (idx[s] == -1) {
      idx[s] = static_cast<int>(disc.size());
      disc.push_back(s);
    }
    seed_idx.push_back(static_cast<uint32_t>(idx[s]));
  }
  std::vector<uint32_t> table;
  for (size_t t = 0; t < disc.size(); ++t)
    for (size_t s = 0; s < tuple.size(); ++s) {
      int y = g.mul(disc[t], tuple[s]);
      if (idx[y] == -1) {
        idx[y] = static_cast<int>(disc.size());
        disc.push_back(y);
      }
      table.push_back(static_cast<uint32_t>(idx[y]));
    }
  std::string out;
  out.reserve(16 + 4 * (seed_idx.size() + table.size()));
  out += 'M';
  uint32_t k = static_cast<uint32_t>(tuple.size());
  uint32_t sz = static_cast<uint32_t>(disc.size());
  out.append(reinterpret_cast<const char*>(&k), 4);
  out.append(reinterpret_cast<const char*>(&sz), 4);
  out.append(reinterpret_cast<const char*>(seed_idx.data()), seed_idx.size() * 4);
  out.append(reinterpret_cast<const char*>(table.data()), table.size() * 4);
  return out;
}

// Socle ------------------------------------------------------------------------

SubgroupSet socle(const FiniteGroup& g) {
  std::vector<int> gens;
  for (const auto& m : minimal_normal_subgroups(g))
    gens.insert(gens.end(), m.gens.begin(), m.gens.end());
  return closure(g, gens);
}

bool is_semisimple(const FiniteGroup& g) {
  for (const auto& m : minimal_normal_subgroups(g))
    if (is_abelian_subset(g, m.gens)) return false;
  return true;
}

namespace {

bool is_nonabelian_simple(const FiniteGroup& g, const SubgroupSet& s) {
  if (s.size() == 1 || is_abelian_subset(g, s.gens)) return false;
  auto mins = minimal_normals_in(g, s);
  return mins.size() == 1 && mins[0].elems == s.elems;
}

}  // namespace

SocleDecomposition socle_factors(const FiniteGroup& g) {
  if (!is_semisimple(g)) throw error(errc::not_semisimple, "socle_factors requires a semisimple group");
  SocleDecomposition dec;
  dec.socle = socle(g);
  auto mins = minimal_normals_in(g, dec.socle);  // simple direct factors, ascending

  int n = g.order();
  dec.factor_of.assign(n, -1);
  dec.socle_index.assign(n, -1);
  for (size_t i = 0; i < dec.socle.elems.size(); ++i) dec.socle_index[dec.socle.elems[i]] = static_cast<int>(i);

  long long order_product = 1;
  for (auto& m : mins) {
    SocleFactor f;
    f.set = std::move(m);
    assert(is_nonabelian_simple(g, f.set));
    // first generator pair in lexicographic order
    bool found = false;
    for (size_t ix = 1; ix < f.set.elems.size() && !found; ++ix)
      for (size_t iy = 1; iy < f.set.elems.size() && !found; ++iy) {
        int x = f.set.elems[ix], y = f.set.elems[iy];
        std::vector<int> pair{x, y};
        if (closure(g, pair).elems == f.set.elems) {
          f.x = x;
          f.y = y;
          f.marked_type = marked_type_cert(g, pair);
          found = true;
        }
      }
    assert(found);
    for (int e : f.set.elems)
      if (e != 0) dec.factor_of[e] = static_cast<int>(dec.factors.size());
    order_product *= f.set.size();
    dec.factors.push_back(std::move(f));
  }
  // Lemma 4.3: the factors generate their direct product, which is the socle.
  assert(order_product == dec.socle.size());

  // Component extraction: per factor, the product of the remaining factors.
  int k = dec.num_factors();
  std::vector<SubgroupSet> complements(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> gens;
    for (int j = 0; j < k; ++j)
      if (j != i) gens.insert(gens.end(), dec.factors[j].set.gens.begin(), dec.factors[j].set.gens.end());
    complements[i] = closure(g, gens);
  }
  dec.weights.assign(dec.socle.elems.size(), 0);
  dec.components.assign(dec.socle.elems.size() * static_cast<size_t>(k), 0);
  for (size_t si = 0; si < dec.socle.elems.size(); ++si) {
    int s = dec.socle.elems[si];
    int check = 0;
    for (int i = 0; i < k; ++i) {
      int comp = -1;
      for (int cand : dec.factors[i].set.elems)
        if (complements[i].contains(g.mul(g.inv(cand), s))) {
          comp = cand;
          break;
        }
      assert(comp >= 0);
      dec.components[si * k + i] = comp;
      if (comp != 0) dec.weights[si]++;
      check = g.mul(check, comp);
    }
    assert(check == s);  // components reassemble the element
  }
  return dec;
}

std::vector<int> decompose_socle_element(const FiniteGroup& g, const SocleDecomposition& dec, int s) {
  if (s < 0 || s >= g.order() || dec.socle_index[s] < 0)
    throw error(errc::not_in_socle, "element " + std::to_string(s) + " is not in the socle");
  auto span = dec.components_of(s);
  return {span.begin(), span.end()};
}

int weight(const FiniteGroup& g, const SocleDecomposition& dec, int s) {
  if (s < 0 || s >= g.order() || dec.socle_index[s] < 0)
    throw error(errc::not_in_socle, "element " + std::to_string(s) + " is not in the socle");
  return dec.weight_of(s);
}

std::vector<int> ConjugationAction::sigma(int g_elem) const {
  const auto& soc = dec->socle.elems;
  std::vector<int> out(soc.size());
  for (size_t i = 0; i < soc.size(); ++i) out[i] = dec->socle_index[group->conj(g_elem, soc[i])];
  return out;
}

std::vector<int> ConjugationAction::factor_perm(int g_elem) const {
  return factor_permutation(*group, *dec, g_elem);
}

ConjugationAction conj_action(const FiniteGroup& g, const SocleDecomposition& dec) {
  return ConjugationAction{&g, &dec};
}

std::vector<int> factor_permutation(const FiniteGroup& g, const SocleDecomposition& dec, int elem) {
  std::vector<int> out(dec.num_factors());
  for (int i = 0; i < dec.num_factors(); ++i) {
    int image = g.conj(elem, dec.factors[i].x);
    int j = dec.factor_of[image];
    assert(j >= 0);  // conjugation permutes the factors
    out[i] = j;
  }
  return out;
}

SubgroupSet pker(const FiniteGroup& g, const SocleDecomposition& dec) {
  SubgroupSet h;
  h.group_order = g.order();
  h.members.assign(g.order(), 0);
  int k = dec.num_factors();
  for (int e = 0; e < g.order(); ++e) {
    bool fixes = true;
    for (int i = 0; i < k && fixes; ++i) {
      int image = g.conj(e, dec.factors[i].x);
      fixes = dec.factor_of[image] == i;
    }
    if (fixes) {
      h.members[e] = 1;
      h.elems.push_back(e);
    }
  }
  SubgroupSet built = trivial_subgroup(g);
  closure_extend(g, built, h.elems);
  assert(built.elems == h.elems);
  h.gens = built.gens;
  return h;
}

bool is_dp_of_nonabelian_simples(const FiniteGroup& g, const SubgroupSet& n) {
  if (n.size() == 1) return true;  // empty product
  if (is_abelian_subset(g, n.gens)) return false;
  auto mins = minimal_normals_in(g, n);
  long long order_product = 1;
  std::vector<int> union_gens;
  for (const auto& m : mins) {
    if (!is_nonabelian_simple(g, m)) return false;
    order_product *= m.size();
    union_gens.insert(union_gens.end(), m.gens.begin(), m.gens.end());
  }
  if (order_product != n.size()) return false;
  return closure(g, union_gens).elems == n.elems;
}

// Extension machinery ----------------------------------------------------------

namespace {

std::string sigma_key(std::span<const int> images) {
  return std::string(reinterpret_cast<const char*>(images.data()), images.size() * sizeof(int));
}

}  // namespace

SigmaIndex build_sigma_index(const FiniteGroup& h, const SocleDecomposition& dec_h) {
  SigmaIndex index;
  for (const auto& f : dec_h.factors) {
    index.gen_elems.push_back(f.x);
    index.gen_elems.push_back(f.y);
  }
  std::vector<int> images(index.gen_elems.size());
  for (int e = 0; e < h.order(); ++e) {
    for (size_t j = 0; j < index.gen_elems.size(); ++j) images[j] = h.conj(e, index.gen_elems[j]);
    index.by_key.emplace(sigma_key(images), e);
  }
  // Faithfulness of the conjugation action makes the key map injective.
  assert(static_cast<int>(index.by_key.size()) == h.order());
  return index;
}

ExtendResult extend_socle_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                      const SocleDecomposition& dec_g, const SocleDecomposition& dec_h,
                                      const ElementMap& f, bool verify_f, const SigmaIndex* index) {
  if (verify_f) {
    // f must be a bijective homomorphism Soc(G) -> Soc(H). Homomorphism on
    // generator products suffices: f(s t) = f(s) f(t) for s a socle generator.
    std::vector<uint8_t> hit(h.order(), 0);
    for (int s : dec_g.socle.elems) {
      int fs = f[s];
      if (fs < 0 || dec_h.socle_index[fs] < 0 || hit[fs])
        throw error(errc::f_not_isomorphism, "f is not a bijection onto Soc(H)");
      hit[fs] = 1;
    }
    if (dec_g.socle.size() != dec_h.socle.size())
      throw error(errc::f_not_isomorphism, "socle sizes differ");
    std::vector<int> soc_gens;
    for (const auto& fac : dec_g.factors) {
      soc_gens.push_back(fac.x);
      soc_gens.push_back(fac.y);
    }
    for (int s : soc_gens)
      for (int t : dec_g.socle.elems)
        if (f[g.mul(s, t)] != h.mul(f[s], f[t]))
          throw error(errc::f_not_isomorphism,
                      "f(st) != f(s)f(t) at s=" + std::to_string(s) + " t=" + std::to_string(t));
  }

  SigmaIndex local;
  if (!index) {
    local = build_sigma_index(h, dec_h);
    index = &local;
  }
  // Pull the H-side generators back through f once.
  std::vector<int> pre(index->gen_elems.size());
  std::vector<int> f_inv(h.order(), -1);
  for (int s : dec_g.socle.elems) f_inv[f[s]] = s;
  for (size_t j = 0; j < index->gen_elems.size(); ++j) {
    pre[j] = f_inv[index->gen_elems[j]];
    assert(pre[j] >= 0);
  }

  ElementMap fhat(g.order(), -1);
  std::vector<int> images(pre.size());
  for (int e = 0; e < g.order(); ++e) {
    for (size_t j = 0; j < pre.size(); ++j) images[j] = f[g.conj(e, pre[j])];
    auto it = index->by_key.find(sigma_key(images));
    if (it == index->by_key.end()) return ExtendResult{std::nullopt, e};
    fhat[e] = it->second;
  }

  // Verify: bijective homomorphism extending f.
  std::vector<uint8_t> hit(h.order(), 0);
  for (int e = 0; e < g.order(); ++e) {
    if (hit[fhat[e]]) return ExtendResult{std::nullopt, e};
    hit[fhat[e]] = 1;
  }
  for (int s : dec_g.socle.elems) assert(fhat[s] == f[s]);
  for (int s : g.small_gens())
    for (int b = 0; b < g.order(); ++b)
      if (fhat[g.mul(s, b)] != h.mul(fhat[s], fhat[b])) return ExtendResult{std::nullopt, s};
  return ExtendResult{std::move(fhat), -1};
}

// Semisimple isomorphism search -------------------------------------------------

namespace {

struct FactorCandidates {
  // per (source factor, target factor): list of generator image pairs
  std::vector<std::pair<int, int>> pairs;
};

struct SearchContext {
  const FiniteGroup& g;
  const FiniteGroup& h;
  const SocleDecomposition& dg;
  const SocleDecomposition& dh;
  SigmaIndex index;
  std::vector<std::vector<FactorCandidates>> cand;  // [i][j]
  long successes = 0;
  bool stop_on_first;
  std::optional<ElementMap> found;
};

const FactorCandidates& candidates_for(SearchContext& ctx, int i, int j) {
  auto& slot = ctx.cand[i][j];
  if (!slot.pairs.empty() || ctx.dg.factors[i].set.size() != ctx.dh.factors[j].set.size())
    return slot;
  const auto& src = ctx.dg.factors[i];
  const auto& dst = ctx.dh.factors[j];
  int ox = ctx.g.element_order(src.x), oy = ctx.g.element_order(src.y);
  for (int u : dst.set.elems) {
    if (u == 0 || ctx.h.element_order(u) != ox) continue;
    for (int v : dst.set.elems) {
      if (v == 0 || ctx.h.element_order(v) != oy) continue;
      std::vector<int> uv{u, v};
      if (marked_type_cert(ctx.h, uv) == src.marked_type) slot.pairs.emplace_back(u, v);
    }
  }
  return slot;
}

// Per-factor isomorphism S_i -> T_j induced by matching generator pairs,
// read off the lockstep closure.
ElementMap factor_iso(SearchContext& ctx, int i, int j, std::pair<int, int> uv) {
  std::vector<int> gt{ctx.dg.factors[i].x, ctx.dg.factors[i].y};
  std::vector<int> ht{uv.first, uv.second};
  std::vector<int> dg_list, dh_list;
  bool ok = lockstep(ctx.g, gt, ctx.h, ht, &dg_list, &dh_list);
  assert(ok);
  (void)ok;
  ElementMap out(ctx.g.order(), -1);
  for (size_t t = 0; t < dg_list.size(); ++t) out[dg_list[t]] = dh_list[t];
  return out;
}

void try_assignment(SearchContext& ctx, const std::vector<int>& matching,
                    const std::vector<ElementMap>& fmaps) {
  int k = ctx.dg.num_factors();
  ElementMap f(ctx.g.order(), -1);
  for (size_t si = 0; si < ctx.dg.socle.elems.size(); ++si) {
    int s = ctx.dg.socle.elems[si];
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = ctx.h.mul(acc, fmaps[i][ctx.dg.components[si * k + i]]);
    f[s] = acc;
  }
  auto res = extend_socle_isomorphism(ctx.g, ctx.h, ctx.dg, ctx.dh, f, false, &ctx.index);
  if (res.iso) {
    ++ctx.successes;
    if (!ctx.found) ctx.found = std::move(res.iso);
  }
}

void search_factor(SearchContext& ctx, const std::vector<int>& matching, int i,
                   std::vector<ElementMap>& fmaps) {
  if (ctx.stop_on_first && ctx.found) return;
  int k = ctx.dg.num_factors();
  if (i == k) {
    try_assignment(ctx, matching, fmaps);
    return;
  }
  const auto& cands = candidates_for(ctx, i, matching[i]);
  for (const auto& uv : cands.pairs) {
    fmaps[i] = factor_iso(ctx, i, matching[i], uv);
    search_factor(ctx, matching, i + 1, fmaps);
    if (ctx.stop_on_first && ctx.found) return;
  }
}

void search_matchings(SearchContext& ctx, std::vector<int>& matching, std::vector<uint8_t>& used,
                      int i) {
  if (ctx.stop_on_first && ctx.found) return;
  int k = ctx.dg.num_factors();
  if (i == k) {
    std::vector<ElementMap> fmaps(k);
    search_factor(ctx, matching, 0, fmaps);
    return;
  }
  for (int j = 0; j < k; ++j) {
    if (used[j] || ctx.dg.factors[i].set.size() != ctx.dh.factors[j].set.size()) continue;
    if (candidates_for(ctx, i, j).pairs.empty()) continue;
    used[j] = 1;
    matching[i] = j;
    search_matchings(ctx, matching, used, i + 1);
    used[j] = 0;
    if (ctx.stop_on_first && ctx.found) return;
  }
}

std::optional<SearchContext> make_context(const FiniteGroup& g, const FiniteGroup& h,
                                          const SocleDecomposition& dg, const SocleDecomposition& dh,
                                          bool stop_on_first) {
  if (g.order() != h.order() || dg.socle.size() != dh.socle.size() ||
      dg.num_factors() != dh.num_factors())
    return std::nullopt;
  SearchContext ctx{g, h, dg, dh, build_sigma_index(h, dh), {}, 0, stop_on_first, std::nullopt};
  ctx.cand.assign(dg.num_factors(), std::vector<FactorCandidates>(dh.num_factors()));
  return ctx;
}

}  // namespace

std::optional<ElementMap> semisimple_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (!is_semisimple(g) || !is_semisimple(h))
    throw error(errc::not_semisimple, "semisimple_isomorphism requires semisimple inputs");
  if (g.order() != h.order()) return std::nullopt;
  auto dg = socle_factors(g), dh = socle_factors(h);
  auto ctx = make_context(g, h, dg, dh, true);
  if (!ctx) return std::nullopt;
  std::vector<int> matching(dg.num_factors(), -1);
  std::vector<uint8_t> used(dg.num_factors(), 0);
  search_matchings(*ctx, matching, used, 0);
  return std::move(ctx->found);
}

long count_extending_socle_isomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  if (!is_semisimple(g) || !is_semisimple(h))
    throw error(errc::not_semisimple, "enumeration requires semisimple inputs");
  if (g.order() != h.order()) return 0;
  auto dg = socle_factors(g), dh = socle_factors(h);
  auto ctx = make_context(g, h, dg, dh, false);
  if (!ctx) return 0;
  std::vector<int> matching(dg.num_factors(), -1);
  std::vector<uint8_t> used(dg.num_factors(), 0);
  search_matchings(*ctx, matching, used, 0);
  return ctx->successes;
}

// Brute-force oracle -------------------------------------------------------------

namespace {

bool brute_dfs(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
               std::vector<int>& images, size_t depth,
               const std::vector<std::vector<int>>& by_order, ElementMap& out) {
  if (depth == gens.size()) {
    std::vector<int> dg_list, dh_list;
    if (!lockstep(g, gens, h, images, &dg_list, &dh_list)) return false;
    if (static_cast<int>(dg_list.size()) != g.order()) return false;  // gens generate G
    if (g.order() != h.order()) return false;
    for (int e = 0; e < g.order(); ++e) out[dg_list[e]] = dh_list[e];
    return true;
  }
  for (int cand : by_order[g.element_order(gens[depth])]) {
    images[depth] = cand;
    // partial consistency: the prefix map must extend to the subgroups so far
    std::span<const int> gpre(gens.data(), depth + 1), hpre(images.data(), depth + 1);
    if (lockstep(g, gpre, h, hpre) && brute_dfs(g, h, gens, images, depth + 1, by_order, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<ElementMap> brute_force_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                  int max_order) {
  if (g.order() > max_order || h.order() > max_order)
    throw error(errc::too_large, "brute-force isomorphism limited to order <= " + std::to_string(max_order));
  if (g.order() != h.order()) return std::nullopt;
  std::vector<std::vector<int>> by_order(g.order() + 1);
  for (int e = 0; e < h.order(); ++e) {
    int o = h.element_order(e);
    if (o <= g.order()) by_order[o].push_back(e);
  }
  const auto& gens = g.small_gens();
  if (gens.empty()) {
    ElementMap id{0};
    return id;  // both trivial
  }
  std::vector<int> images(gens.size(), -1);
  ElementMap out(g.order(), -1);
  if (brute_dfs(g, h, gens, images, 0, by_order, out)) return out;
  return std::nullopt;
}

}  // namespace gwl
