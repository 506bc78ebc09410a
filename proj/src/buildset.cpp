#include "nesto/buildset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "json.hpp"

namespace nesto {

// ---------------------------------------------------------------- BuildingSet

BuildingSet::BuildingSet(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), size_lex_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  by_value_ = sets_;
  std::sort(by_value_.begin(), by_value_.end());
}

std::string set_string(Mask s, int n) {
  std::string out;
  if (n < 10) {
    for_each_bit(s, [&](int i) { out += static_cast<char>('1' + i); });
    return out.empty() ? "{}" : out;
  }
  out = "[";
  bool first = true;
  for_each_bit(s, [&](int i) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  });
  return out + "]";
}

BuildingSet BuildingSet::make(int n, std::vector<Mask> sets, SingletonPolicy policy) {
  if (n < 0) throw InvalidInput("negative ground-set size");
  require_capacity(n <= kMaxGround, "building sets are limited to ground sets of " +
                                        std::to_string(kMaxGround) + " elements");
  for (Mask s : sets) {
    if (s == 0) throw NotABuildingSet("building sets may not contain the empty set");
    if (s & ~full_mask(n)) throw NotABuildingSet("member exceeds the ground set 1.." + std::to_string(n));
  }
  std::set<Mask> present(sets.begin(), sets.end());
  for (int i = 0; i < n; ++i) {
    if (present.contains(bit(i))) continue;
    if (policy == SingletonPolicy::Strict)
      throw NotABuildingSet("singleton {" + std::to_string(i + 1) + "} is missing");
    present.insert(bit(i));
  }
  for (auto a = present.begin(); a != present.end(); ++a)
    for (auto b = std::next(a); b != present.end(); ++b)
      if ((*a & *b) && !present.contains(*a | *b))
        throw NotABuildingSet(set_string(*a, n) + " and " + set_string(*b, n) + " intersect but their union " +
                              set_string(*a | *b, n) + " is missing");
  return BuildingSet(n, std::vector<Mask>(present.begin(), present.end()));
}

BuildingSet BuildingSet::closure(int n, std::vector<Mask> sets) {
  if (n < 0) throw InvalidInput("negative ground-set size");
  require_capacity(n <= kMaxGround, "building sets are limited to ground sets of " +
                                        std::to_string(kMaxGround) + " elements");
  std::set<Mask> present;
  for (Mask s : sets) {
    if (s == 0 || (s & ~full_mask(n))) throw InvalidInput("closure: member outside the ground set");
    present.insert(s);
  }
  for (int i = 0; i < n; ++i) present.insert(bit(i));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> cur(present.begin(), present.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if ((cur[i] & cur[j]) && present.insert(cur[i] | cur[j]).second) changed = true;
  }
  return BuildingSet(n, std::vector<Mask>(present.begin(), present.end()));
}

BuildingSet BuildingSet::discrete(int n) {
  std::vector<Mask> sets;
  for (int i = 0; i < n; ++i) sets.push_back(bit(i));
  return make(n, std::move(sets));
}

bool BuildingSet::contains(Mask s) const { return std::binary_search(by_value_.begin(), by_value_.end(), s); }

std::vector<Mask> BuildingSet::maximal() const {
  std::vector<Mask> out;
  for (Mask s : sets_) {
    bool covered = false;
    for (Mask t : sets_)
      if (t != s && (s & t) == s) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return out;
}

std::strong_ordering operator<=>(const BuildingSet& a, const BuildingSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.sets_.size() <=> b.sets_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.by_value_.begin(), a.by_value_.end(), b.by_value_.begin(),
                                                b.by_value_.end());
}

// ---------------------------------------------------------------- operations

BuildingSet from_graph(const Graph& g) {
  require_capacity(g.size() <= BuildingSet::kMaxGround,
                   "graphical building sets are limited to " + std::to_string(BuildingSet::kMaxGround) +
                       " vertices");
  std::vector<Mask> sets;
  for (Mask s = 1; s <= g.vertices() && s != 0; ++s)
    if (is_connected_subset(g, s)) sets.push_back(s);
  return BuildingSet(g.size(), std::move(sets));
}

BuildingSet restriction(const BuildingSet& b, Mask subset) {
  if (subset & ~b.ground()) throw InvalidInput("restriction: subset exceeds the ground set");
  std::vector<Mask> sets;
  for (Mask s : b.sets_)
    if ((s & subset) == s) sets.push_back(compress(s, subset));
  return BuildingSet(popcount(subset), std::move(sets));
}

BuildingSet contraction(const BuildingSet& b, Mask subset) {
  if (subset & ~b.ground()) throw InvalidInput("contraction: subset exceeds the ground set");
  const Mask rest = b.ground() & ~subset;
  std::vector<Mask> sets;
  for (Mask s : b.sets_)
    if (s & rest) sets.push_back(compress(s & rest, rest));
  return BuildingSet(popcount(rest), std::move(sets));
}

BuildingSet product(const BuildingSet& a, const BuildingSet& b) {
  require_capacity(a.n_ + b.n_ <= BuildingSet::kMaxGround, "product exceeds the ground-set limit");
  std::vector<Mask> sets = a.sets_;
  for (Mask s : b.sets_) sets.push_back(s << a.n_);
  return BuildingSet(a.n_ + b.n_, std::move(sets));
}

BuildingSet relabeled(const BuildingSet& b, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != b.n_) throw InvalidInput("relabeled: permutation size mismatch");
  std::vector<Mask> sets;
  sets.reserve(b.sets_.size());
  for (Mask s : b.sets_) {
    Mask t = 0;
    for_each_bit(s, [&](int i) { t |= bit(perm[i]); });
    sets.push_back(t);
  }
  return BuildingSet(b.n_, std::move(sets));
}

std::vector<Component> components(const BuildingSet& b) {
  std::vector<Component> out;
  for (Mask m : b.maximal()) out.push_back({m, restriction(b, m)});
  return out;
}

std::vector<CoproductTerm> coproduct(const BuildingSet& b) {
  require_capacity(b.ground_size() <= kMaxCoproductGround,
                   "coproduct: n = " + std::to_string(b.ground_size()) + " exceeds " +
                       std::to_string(kMaxCoproductGround));
  std::vector<CoproductTerm> out;
  const Mask top = b.ground();
  for (Mask s = 0;; ++s) {
    out.push_back({s, restriction(b, s), contraction(b, s)});
    if (s == top) break;
  }
  return out;
}

BuildingSet canonical_relabel(const BuildingSet& b) {
  const int n = b.ground_size();
  require_capacity(n <= kMaxCanonicalGround, "canonical_relabel: n = " + std::to_string(n) + " exceeds " +
                                                 std::to_string(kMaxCanonicalGround));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  std::vector<Mask> cur(b.sets().size());
  do {
    for (std::size_t k = 0; k < b.sets().size(); ++k) {
      Mask t = 0;
      for_each_bit(b.sets()[k], [&](int i) { t |= bit(perm[i]); });
      cur[k] = t;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) return b;
  return BuildingSet::make(n, std::move(best), SingletonPolicy::Strict);
}

// ---------------------------------------------------------------- Hopf words

HopfWord::HopfWord(const std::vector<BuildingSet>& factors) {
  for (const BuildingSet& f : factors)
    for (const Component& c : components(f)) factors_.push_back(canonical_relabel(c.restricted));
  std::sort(factors_.begin(), factors_.end());
}

HopfWord HopfWord::from_canonical(std::vector<BuildingSet> factors) {
  HopfWord w;
  w.factors_ = std::move(factors);
  std::sort(w.factors_.begin(), w.factors_.end());
  return w;
}

int HopfWord::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.ground_size();
  return d;
}

namespace {

class TakeuchiExpansion {
 public:
  explicit TakeuchiExpansion(const BuildingSet& b) : b_(b) {}

  HopfElement run() {
    HopfElement out;
    std::vector<BuildingSet> factors;
    extend(0, 0, factors, out);
    return out;
  }

 private:
  const std::vector<BuildingSet>& piece(Mask prev, Mask next) {
    auto [it, inserted] = cache_.try_emplace({prev, next});
    if (inserted) {
      const BuildingSet local = contraction(restriction(b_, next), compress(prev, next));
      for (const Component& c : components(local)) it->second.push_back(canonical_relabel(c.restricted));
    }
    return it->second;
  }

  void extend(Mask prev, int k, std::vector<BuildingSet>& factors, HopfElement& out) {
    const Mask rest = b_.ground() & ~prev;
    if (rest == 0) {
      if (k == 0) {  // the empty building set: S(1) = 1
        out[HopfWord{}] += 1;
        return;
      }
      const Coeff sign = k % 2 == 0 ? 1 : -1;
      auto& slot = out[HopfWord::from_canonical(factors)];
      slot = checked_add(slot, sign);
      return;
    }
    // Every nonempty block of the remaining elements.
    for (Mask block = rest; block; block = (block - 1) & rest) {
      const auto& parts = piece(prev, prev | block);
      const std::size_t mark = factors.size();
      factors.insert(factors.end(), parts.begin(), parts.end());
      extend(prev | block, k + 1, factors, out);
      factors.resize(mark);
    }
  }

  const BuildingSet& b_;
  std::map<std::pair<Mask, Mask>, std::vector<BuildingSet>> cache_;
};

}  // namespace

HopfElement takeuchi_antipode(const BuildingSet& b) {
  require_capacity(b.ground_size() <= kMaxTakeuchiGround,
                   "takeuchi_antipode: n = " + std::to_string(b.ground_size()) + " exceeds " +
                       std::to_string(kMaxTakeuchiGround));
  HopfElement out = TakeuchiExpansion(b).run();
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BuildingSet random_building_set(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(density);
  std::vector<Mask> seeds;
  for (Mask s = 1; s <= full_mask(n) && s != 0; ++s)
    if (popcount(s) >= 2 && pick(rng)) seeds.push_back(s);
  return BuildingSet::closure(n, std::move(seeds));
}

// -------------------------------------------------------------------- formats

BuildingSet parse_buildset_json(std::string_view text, SingletonPolicy policy) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("sets") ||
      !j["sets"].is_array())
    throw ParseError("building-set JSON needs integer 'n' and array 'sets'", 0);
  const auto n = j["n"].get<long long>();
  if (n < 0) throw ParseError("'n' must be non-negative", 0);
  require_capacity(n <= BuildingSet::kMaxGround, "building set has " + std::to_string(n) + " elements; limit is " +
                                                     std::to_string(BuildingSet::kMaxGround));
  std::vector<Mask> sets;
  const auto& arr = j["sets"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_array() || arr[i].empty()) throw ParseError("set #" + std::to_string(i + 1) + " must be a nonempty array", i);
    Mask m = 0;
    for (const auto& v : arr[i]) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > n)
        throw ParseError("set #" + std::to_string(i + 1) + " has an element outside 1.." + std::to_string(n), i);
      m |= bit(v.get<int>() - 1);
    }
    sets.push_back(m);
  }
  return BuildingSet::make(static_cast<int>(n), std::move(sets), policy);
}

std::string to_json(const BuildingSet& b) {
  nlohmann::ordered_json j;
  j["n"] = b.ground_size();
  j["sets"] = nlohmann::ordered_json::array();
  for (Mask s : b.sets()) {
    std::vector<int> e;
    for_each_bit(s, [&](int i) { e.push_back(i + 1); });
    j["sets"].push_back(e);
  }
  return j.dump();
}

std::string to_string(const BuildingSet& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.sets().size(); ++i) {
    if (i) out += ',';
    out += set_string(b.sets()[i], b.ground_size());
  }
  return out + "}";
}

std::string to_string(const HopfWord& w) {
  if (w.factors().empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.factors().size(); ++i) {
    if (i) out += "*";
    out += to_string(w.factors()[i]);
  }
  return out;
}

std::string to_string(const HopfElement& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [w, k] : e) {
    const bool neg = k < 0;
    const auto mag = neg ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += to_string(w);
  }
  return out;
}

Mask parse_vertex_set(std::string_view text, int n) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) s += c;
  Mask m = 0;
  auto add = [&](long v, std::size_t pos) {
    if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n), pos);
    m |= bit(static_cast<int>(v - 1));
  };
  if (s.find(',') == std::string::npos) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad vertex set", i);
      add(s[i] - '0', i);
    }
    return m;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    const std::string tok = s.substr(start, end - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad vertex '" + tok + "'", start);
    add(std::stol(tok), start);
    start = end + 1;
  }
  return m;
}

}  // namespace nesto
