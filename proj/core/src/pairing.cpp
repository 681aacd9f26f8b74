#include "rulinglab/pairing.hpp"

#include <algorithm>
#include <sstream>

#include "rulinglab/front.hpp"

namespace rulinglab {

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    if (mate[i] > i) out.emplace_back(i, mate[i]);
  return out;
}

std::vector<int> Pairing::homological() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (mate[i] == i) out.push_back(i);
  return out;
}

HomologyType homology_type(const Pairing& p, const std::vector<int>& mu, int m) {
  HomologyType h;
  for (int i : p.homological()) ++h[reduce_mod(mu[i], m)];
  return h;
}

bool pairing_valid(const Pairing& p, const std::vector<int>& mu, int m,
                   bool allow_homological) {
  if (p.size() != static_cast<int>(mu.size())) return false;
  for (int i = 0; i < p.size(); ++i) {
    int j = p.mate[i];
    if (j < 0 || j >= p.size() || p.mate[j] != i) return false;
    if (j == i && !allow_homological) return false;
    if (j > i && !congruent(mu[i], long(mu[j]) + 1, m)) return false;
  }
  return true;
}

namespace {

void enumerate_rec(const std::vector<int>& mu, int m, bool allow_homological,
                   Pairing& current, std::vector<bool>& used, int from,
                   std::vector<Pairing>& out) {
  int n = static_cast<int>(mu.size());
  int i = from;
  while (i < n && used[i]) ++i;
  if (i == n) {
    out.push_back(current);
    return;
  }
  used[i] = true;
  for (int j = i + 1; j < n; ++j) {
    if (used[j] || !congruent(mu[i], long(mu[j]) + 1, m)) continue;
    used[j] = true;
    current.pair(i, j);
    enumerate_rec(mu, m, allow_homological, current, used, i + 1, out);
    current.mate[i] = i;
    current.mate[j] = j;
    used[j] = false;
  }
  if (allow_homological) enumerate_rec(mu, m, allow_homological, current, used, i + 1, out);
  used[i] = false;
}

}  // namespace

std::vector<Pairing> enumerate_pairings(const std::vector<int>& mu, int m,
                                        bool allow_homological) {
  std::vector<Pairing> out;
  Pairing current(static_cast<int>(mu.size()));
  std::vector<bool> used(mu.size(), false);
  enumerate_rec(mu, m, allow_homological, current, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Pairing parse_pairing(const std::string& text, int n) {
  Pairing p(n);
  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected strand label", 1, static_cast<int>(pos + 1));
    int v = std::stoi(text.substr(start, pos - start));
    if (v < 1 || v > n)
      throw ParseError("strand label " + std::to_string(v) + " out of range 1.." + std::to_string(n),
                       1, static_cast<int>(start + 1));
    if (seen[v - 1])
      throw ParseError("strand " + std::to_string(v) + " listed twice", 1, static_cast<int>(start + 1));
    seen[v - 1] = true;
    return v - 1;
  };

  skip_space();
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '(') {
      ++pos;
      int i = read_int();
      skip_space();
      if (pos >= text.size() || text[pos] != ',')
        throw ParseError("expected ',' in pair", 1, static_cast<int>(pos + 1));
      ++pos;
      int j = read_int();
      skip_space();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')'", 1, static_cast<int>(pos + 1));
      ++pos;
      if (i == j) throw ParseError("cannot pair a strand with itself", 1, static_cast<int>(pos));
      p.pair(std::min(i, j), std::max(i, j));
    } else if (c == '[') {
      ++pos;
      int i = read_int();
      skip_space();
      if (pos >= text.size() || text[pos] != ']')
        throw ParseError("expected ']'", 1, static_cast<int>(pos + 1));
      ++pos;
      p.mate[i] = i;  // explicit homological singleton
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in pairing", 1,
                       static_cast<int>(pos + 1));
    }
    skip_space();
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i] && p.mate[i] == i)
      throw ParseError("strand " + std::to_string(i + 1) + " not mentioned; use [" +
                           std::to_string(i + 1) + "] for a homological strand",
                       1, 1);
  return p;
}

std::string to_string(const Pairing& p) {
  std::ostringstream os;
  for (auto [i, j] : p.pairs()) os << "(" << i + 1 << "," << j + 1 << ")";
  for (int i : p.homological()) os << "[" << i + 1 << "]";
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace rulinglab
