#include "skernel/delta.hpp"

#include <algorithm>

#include "skernel/error.hpp"

namespace skernel::delta {

bool Map::is_identity() const {
  if (source() != target) return false;
  for (int i = 0; i <= target; ++i)
    if (values[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Map::is_surjective() const {
  if (values.empty()) return target < 0;
  if (values.front() != 0 || values.back() != target) return false;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > 1) return false;
  return true;
}

bool Map::is_injective() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  return true;
}

Map identity(int n) {
  Map m{n, std::vector<int>(static_cast<std::size_t>(n + 1))};
  for (int i = 0; i <= n; ++i) m.values[static_cast<std::size_t>(i)] = i;
  return m;
}

Map coface(int n, int i) {
  if (i < 0 || i > n) throw ParameterError("coface index out of range");
  Map m{n, {}};
  for (int k = 0; k < n; ++k) m.values.push_back(k < i ? k : k + 1);
  return m;
}

Map codegeneracy(int n, int j) {
  if (j < 0 || j > n) throw ParameterError("codegeneracy index out of range");
  Map m{n, {}};
  for (int k = 0; k <= n + 1; ++k) m.values.push_back(k <= j ? k : k - 1);
  return m;
}

Map compose(const Map& a, const Map& b) {
  if (b.target != a.source()) throw StructuralError("delta::compose: maps do not chain");
  Map m{a.target, {}};
  m.values.reserve(b.values.size());
  for (int v : b.values) m.values.push_back(a.values[static_cast<std::size_t>(v)]);
  return m;
}

EpiMono factor(const Map& theta) {
  EpiMono f;
  f.injection.target = theta.target;
  int k = -1;
  for (std::size_t i = 0; i < theta.values.size(); ++i) {
    if (i == 0 || theta.values[i] != theta.values[i - 1]) {
      ++k;
      f.injection.values.push_back(theta.values[i]);
    }
    f.surjection.values.push_back(k);
  }
  f.surjection.target = k;
  return f;
}

std::vector<int> word_of(const Map& surjection) {
  std::vector<int> w;
  for (int j = surjection.source() - 1; j >= 0; --j)
    if (surjection.values[static_cast<std::size_t>(j)] ==
        surjection.values[static_cast<std::size_t>(j + 1)])
      w.push_back(j);
  return w;
}

Map surjection_of(const std::vector<int>& word, int p) {
  const int n = p + static_cast<int>(word.size());
  Map m{p, std::vector<int>(static_cast<std::size_t>(n + 1))};
  std::vector<bool> repeat(static_cast<std::size_t>(std::max(n, 0)), false);
  for (int j : word) {
    if (j < 0 || j >= n) throw ParameterError("degeneracy index out of range");
    repeat[static_cast<std::size_t>(j)] = true;
  }
  int v = 0;
  for (int j = 0; j <= n; ++j) {
    m.values[static_cast<std::size_t>(j)] = v;
    if (j < n && !repeat[static_cast<std::size_t>(j)]) ++v;
  }
  return m;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Map> surjections(int n, int k) {
  // A surjection [n] ↠ [k] is determined by the k positions j < n where it steps up.
  std::vector<Map> out;
  if (k < 0 || k > n) return out;
  for (const auto& steps : subsets(n, k)) {
    Map m{k, std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
    std::vector<bool> step(static_cast<std::size_t>(n), false);
    for (int s : steps) step[static_cast<std::size_t>(s)] = true;
    int v = 0;
    for (int j = 0; j <= n; ++j) {
      m.values[static_cast<std::size_t>(j)] = v;
      if (j < n && step[static_cast<std::size_t>(j)]) ++v;
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> injections(int k, int n) {
  std::vector<Map> out;
  for (const auto& s : subsets(n + 1, k + 1)) out.push_back(Map{n, s});
  return out;
}

std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  for (const auto& mu : subsets(p + q, p)) {
    Shuffle s;
    s.mu = mu;
    std::vector<bool> in_mu(static_cast<std::size_t>(p + q), false);
    for (int m : mu) in_mu[static_cast<std::size_t>(m)] = true;
    for (int i = 0; i < p + q; ++i)
      if (!in_mu[static_cast<std::size_t>(i)]) s.nu.push_back(i);
    // inversions of (μ, ν): pairs μ_a > ν_b
    long inversions = 0;
    for (int m : s.mu)
      for (int n : s.nu)
        if (m > n) ++inversions;
    s.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace skernel::delta
