#include "humbert/cycles/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "humbert/error.hpp"
#include "humbert/plucker/plucker.hpp"
#include "humbert/surface/humbert.hpp"

namespace humbert::cycles {

namespace {

using IntMatrix4 = std::array<std::int64_t, 16>;

IntMatrix4 to_int4(const MatrixQ& g) {
  IntMatrix4 m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[4 * i + j] = g(i, j).to_int64();
  return m;
}

IntMatrix4 mul4(const IntMatrix4& a, const IntMatrix4& b) {
  IntMatrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (a[4 * i + k] != 0)
        for (int j = 0; j < 4; ++j) c[4 * i + j] += a[4 * i + k] * b[4 * k + j];
  return c;
}

IntMatrix5 mul5(const IntMatrix5& a, const IntMatrix5& b) {
  IntMatrix5 c{};
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < 5; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

bool is_identity_mod(const IntMatrix4& m, std::int64_t n) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (mod(m[4 * i + j] - (i == j ? 1 : 0), n) != 0) return false;
  return true;
}

bool is_identity_mod(const IntMatrix5& m, std::int64_t n) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (mod(m[i][j] - (i == j ? 1 : 0), n) != 0) return false;
  return true;
}

struct VectorHash {
  std::size_t operator()(const LatticeVector& x) const {
    std::size_t h = 0;
    for (auto v : x) h = h * 1000003u + static_cast<std::size_t>(v + 4096);
    return h;
  }
};

std::string inverse_name(const std::string& name) {
  const std::string suffix = "^-1";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return name.substr(0, name.size() - suffix.size());
  return name + suffix;
}

std::vector<LatticeVector> enumerate_slice(std::int64_t delta_target, int box, const std::optional<CongClass>& cc,
                                           int a) {
  std::vector<LatticeVector> out;
  for (int b = -box; b <= box; ++b)
    for (int c = -box; c <= box; ++c)
      for (int d = -box; d <= box; ++d)
        for (int e = -box; e <= box; ++e) {
          const LatticeVector x{a, b, c, d, e};
          if (delta(x) == delta_target && (!cc || cc->contains(x))) out.push_back(x);
        }
  return out;
}

// Fraction-free (Bareiss) elimination.
std::size_t integer_rank(std::vector<std::vector<__int128>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::int64_t delta(const LatticeVector& x) { return x[1] * x[1] - 4 * x[0] * x[2] - 4 * x[3] * x[4]; }

std::int64_t pairing(const LatticeVector& x, const LatticeVector& y) {
  return x[1] * y[1] - 2 * (x[0] * y[2] + x[2] * y[0]) - 2 * (x[3] * y[4] + x[4] * y[3]);
}

std::int64_t content(const LatticeVector& x) {
  std::int64_t g = 0;
  for (auto v : x) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

std::int64_t height(const LatticeVector& x) {
  std::int64_t h = 0;
  for (auto v : x) h = std::max(h, v < 0 ? -v : v);
  return h;
}

std::string str(const LatticeVector& x) {
  std::ostringstream os;
  os << '(' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << x[4] << ')';
  return os.str();
}

nlohmann::json to_json(const LatticeVector& x) { return nlohmann::json(std::vector<std::int64_t>(x.begin(), x.end())); }

LatticeVector reduce_mod(const LatticeVector& x, std::int64_t n) {
  LatticeVector r{};
  for (std::size_t k = 0; k < 5; ++k) r[k] = mod(x[k], n);
  return r;
}

bool CongClass::contains(const LatticeVector& x) const { return reduce_mod(x, level) == reduce_mod(h, level); }

unsigned kernel_threads() {
  const char* env = std::getenv("HUMBERT_KERNEL_THREADS");
  if (env == nullptr) return 1;
  const long n = std::strtol(env, nullptr, 10);
  return static_cast<unsigned>(std::clamp(n, 1L, 64L));
}

std::vector<LatticeVector> enumerate_box(std::int64_t delta_target, int box, const std::optional<CongClass>& cc,
                                         unsigned threads) {
  if (box < 0 || box > kMaxBox)
    throw Error(ErrorCode::BoxCapExceeded, "box " + std::to_string(box) + " outside [0, " + std::to_string(kMaxBox) + "]");
  if (cc && cc->level < 1) throw Error(ErrorCode::DimensionMismatch, "congruence level must be positive");
  if (threads == 0) threads = kernel_threads();
  const int slices = 2 * box + 1;
  std::vector<std::vector<LatticeVector>> parts(slices);
  const unsigned workers = std::min<unsigned>(threads, slices);
  if (workers <= 1) {
    for (int s = 0; s < slices; ++s) parts[s] = enumerate_slice(delta_target, box, cc, s - box);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < slices; s += static_cast<int>(workers))
          parts[s] = enumerate_slice(delta_target, box, cc, s - box);
      });
    for (auto& t : pool) t.join();
  }
  std::vector<LatticeVector> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

IntMatrix5 rho_matrix(const MatrixQ& g) {
  const MatrixQ r = plucker::iso_rho(g);
  IntMatrix5 m{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (!r(i, j).is_integer()) throw Error(ErrorCode::NotSymplectic, "g does not preserve the lattice");
      m[i][j] = r(i, j).to_int64();
    }
  return m;
}

const std::vector<Generator>& sp4z_generators() {
  static const std::vector<Generator> gens = [] {
    std::vector<Generator> out;
    for (auto& [name, g] : plucker::symplectic_generators()) out.push_back({name, g, rho_matrix(g)});
    return out;
  }();
  return gens;
}

LatticeVector apply_rho(const IntMatrix5& r, const LatticeVector& x) {
  LatticeVector y{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) y[i] += r[i][j] * x[j];
  return y;
}

LatticeVector act(const MatrixQ& g, const LatticeVector& x) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_integer()) throw Error(ErrorCode::NotSymplectic, "act needs an integral matrix");
  return apply_rho(rho_matrix(g), x);
}

GeneratorSet congruence_generators(std::int64_t level, int word_cap) {
  if (level < 1) throw Error(ErrorCode::DimensionMismatch, "level must be positive");
  const auto& gens = sp4z_generators();
  GeneratorSet set;
  set.level = level;
  if (level == 1) {
    set.label = "Sp4(Z)";
    for (const auto& g : gens) {
      set.words.push_back(g.name);
      set.rho.push_back(g.rho);
    }
    return set;
  }
  set.label = "Gamma(" + std::to_string(level) + ")";
  set.word_cap = word_cap;
  struct Entry {
    std::vector<std::size_t> word;
    IntMatrix5 rho;
  };
  std::map<IntMatrix4, Entry> seen;
  std::vector<std::pair<IntMatrix4, Entry>> frontier;
  const IntMatrix4 id = to_int4(MatrixQ::identity(4));
  IntMatrix5 id5{};
  for (int i = 0; i < 5; ++i) id5[i][i] = 1;
  seen.emplace(id, Entry{{}, id5});
  frontier.push_back({id, Entry{{}, id5}});
  std::vector<IntMatrix4> gen4;
  for (const auto& g : gens) gen4.push_back(to_int4(g.g));
  std::vector<Entry> found;
  for (int len = 1; len <= word_cap; ++len) {
    std::vector<std::pair<IntMatrix4, Entry>> next;
    for (const auto& [m, entry] : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        IntMatrix4 prod = mul4(m, gen4[k]);
        if (seen.count(prod)) continue;
        Entry e{entry.word, mul5(entry.rho, gens[k].rho)};
        e.word.push_back(k);
        seen.emplace(prod, e);
        if (is_identity_mod(prod, level) && is_identity_mod(e.rho, level)) found.push_back(e);
        next.emplace_back(prod, std::move(e));
      }
    frontier = std::move(next);
  }
  // found is already ordered by length then lexicographic word.
  auto name_of = [&](const std::vector<std::size_t>& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "*" : "") + gens[word[k]].name;
    return s;
  };
  std::map<std::string, std::size_t> gen_index;
  for (std::size_t k = 0; k < gens.size(); ++k) gen_index[gens[k].name] = k;
  std::map<IntMatrix5, bool> kept;
  for (const auto& e : found) {
    if (set.words.size() >= kMaxCongruenceWords) break;
    if (kept.count(e.rho)) continue;
    kept[e.rho] = true;
    set.words.push_back(name_of(e.word));
    set.rho.push_back(e.rho);
    std::vector<std::size_t> inv;
    IntMatrix5 inv_rho = id5;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
      const std::size_t k = gen_index.at(inverse_name(gens[*it].name));
      inv.push_back(k);
      inv_rho = mul5(inv_rho, gens[k].rho);
    }
    if (!kept.count(inv_rho)) {
      kept[inv_rho] = true;
      set.words.push_back(name_of(inv));
      set.rho.push_back(inv_rho);
    }
  }
  return set;
}

OrbitInvariants invariants(const LatticeVector& x, std::int64_t level) {
  return {delta(x), content(x), reduce_mod(x, level)};
}

std::optional<std::size_t> OrbitPartition::class_of(const LatticeVector& x) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].begin(), classes[c].end(), x)) return c;
  return std::nullopt;
}

OrbitPartition orbit_partition(std::vector<LatticeVector> vs, std::int64_t level, std::int64_t height_bound,
                               int word_cap) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  OrbitPartition part;
  part.height_bound = height_bound;
  part.generators = congruence_generators(level, word_cap);
  for (const auto& v : vs)
    if (height(v) > height_bound)
      throw Error(ErrorCode::HeightBoundTooSmall, "input vector " + str(v) + " exceeds the height bound");

  std::unordered_map<LatticeVector, std::size_t, VectorHash> component;
  std::size_t next_id = 0;
  std::map<std::size_t, std::vector<LatticeVector>> by_component;
  for (const auto& seed : vs) {
    auto found = component.find(seed);
    if (found != component.end()) {
      by_component[found->second].push_back(seed);
      continue;
    }
    const std::size_t id = next_id++;
    std::deque<LatticeVector> queue{seed};
    component.emplace(seed, id);
    while (!queue.empty()) {
      const LatticeVector x = queue.front();
      queue.pop_front();
      for (const auto& r : part.generators.rho) {
        const LatticeVector y = apply_rho(r, x);
        if (height(y) > height_bound) continue;
        if (component.emplace(y, id).second) queue.push_back(y);
      }
    }
    by_component[id].push_back(seed);
  }
  part.explored = component.size();
  for (auto& [id, members] : by_component) part.classes.push_back(std::move(members));
  std::sort(part.classes.begin(), part.classes.end());

  std::map<OrbitInvariants, std::size_t> seen;
  bool separated = true;
  for (const auto& cls : part.classes)
    if (++seen[invariants(cls.front(), level)] > 1) separated = false;
  part.exact = separated;
  part.height_bound_too_small = !separated;
  return part;
}

exact::MatrixQ Frame::gram() const {
  const std::size_t n = vectors.size();
  exact::MatrixQ g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = exact::Rational(static_cast<long>(pairing(vectors[i], vectors[j])));
  return g;
}

FrameClass frame_classify(const Frame& f) {
  const std::size_t n = f.vectors.size();
  if (n == 0 || n > 3) throw Error(ErrorCode::DimensionMismatch, "frames have 1 to 3 vectors");
  std::vector<std::vector<__int128>> gram(n, std::vector<__int128>(n)), rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = pairing(f.vectors[i], f.vectors[j]);
    rows.emplace_back(f.vectors[i].begin(), f.vectors[i].end());
  }
  const std::size_t gram_rank = integer_rank(std::move(gram));
  const std::size_t span_dim = integer_rank(std::move(rows));
  return {gram_rank == n, gram_rank == span_dim, gram_rank, span_dim};
}

nlohmann::json cycle_report(std::int64_t delta_target, const std::optional<LatticeVector>& h, std::int64_t level,
                            int box, std::int64_t height_bound, int word_cap) {
  if (level < 1) throw Error(ErrorCode::DimensionMismatch, "level must be positive");
  std::optional<CongClass> cc;
  if (h) cc = CongClass{*h, level};
  const auto vs = enumerate_box(delta_target, box, cc);
  const auto part = orbit_partition(vs, level, std::max<std::int64_t>(height_bound, box), word_cap);

  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : part.classes) {
    const auto inv = invariants(cls.front(), level);
    classes.push_back({{"representative", to_json(cls.front())},
                       {"size", cls.size()},
                       {"content", inv.content},
                       {"residue", to_json(inv.residue)}});
  }
  nlohmann::json normal = nullptr;
  if (delta_target > 0 && (delta_target % 4 == 0 || delta_target % 4 == 1)) {
    const auto rel = surface::normal_form(delta_target);
    const auto f = rel.five_coords();
    LatticeVector nf{};
    for (std::size_t k = 0; k < 5; ++k) nf[k] = f[k].to_int64();
    const auto cls = part.class_of(nf);
    normal = {{"relation", rel.str()},
              {"vector", to_json(nf)},
              {"class", cls ? nlohmann::json(*cls) : nlohmann::json(nullptr)}};
  }
  return {{"stable_range", {{"n", 1}, {"m", 5}, {"bound", "5/4"}, {"holds", 4 * 1 < 5}}},
          {"vector_count", vs.size()},
          {"orbit_count", part.classes.size()},
          {"classes", classes},
          {"exact", part.exact},
          {"height_bound_too_small", part.height_bound_too_small},
          {"height_bound", part.height_bound},
          {"explored", part.explored},
          {"generator_set", part.generators.label},
          {"word_cap", part.generators.word_cap},
          {"words", part.generators.words},
          {"normal_form", normal}};
}

}  // namespace humbert::cycles
