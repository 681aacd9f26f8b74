#include "rulinglab/front.hpp"

#include <numeric>
#include <sstream>

namespace rulinglab {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
};

void skip_ws_and_comments(Cursor& c, bool stop_at_newline) {
  while (!c.eof()) {
    char ch = c.peek();
    if (ch == '#') {
      while (!c.eof() && c.peek() != '\n') c.advance();
    } else if (ch == '\n') {
      if (stop_at_newline) return;
      c.advance();
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      c.advance();
    } else {
      return;
    }
  }
}

std::string read_token(Cursor& c) {
  std::string tok;
  while (!c.eof()) {
    char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '#') break;
    tok.push_back(ch);
    c.advance();
  }
  return tok;
}

int parse_int(const std::string& tok, const Cursor& c) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", c.line, c.col);
  }
}

void expect_line_end(Cursor& c) {
  skip_ws_and_comments(c, /*stop_at_newline=*/true);
  if (!c.eof() && c.peek() != '\n')
    throw ParseError("trailing characters on line", c.line, c.col);
}

}  // namespace

TangleFront parse_tangle(const std::string& text) {
  Cursor c{text};
  TangleFront front;
  bool saw_r = false, saw_left = false, saw_mu = false;

  auto read_header_int = [&](Cursor& cur) {
    skip_ws_and_comments(cur, true);
    std::string eq = read_token(cur);
    if (eq != "=") throw ParseError("expected '='", cur.line, cur.col);
    skip_ws_and_comments(cur, true);
    return parse_int(read_token(cur), cur);
  };

  // Header: r = <int>, left = <int>, mu = [..]; then one slice per line.
  while (true) {
    skip_ws_and_comments(c, false);
    if (c.eof()) break;
    int line = c.line, col = c.col;
    std::string tok = read_token(c);
    if (tok == "r") {
      front.r = read_header_int(c);
      if (front.r < 0) throw ParseError("r must be nonnegative", line, col);
      saw_r = true;
      expect_line_end(c);
    } else if (tok == "left") {
      front.n_left = read_header_int(c);
      if (front.n_left < 0) throw ParseError("left must be nonnegative", line, col);
      saw_left = true;
      expect_line_end(c);
    } else if (tok == "mu") {
      skip_ws_and_comments(c, true);
      if (read_token(c) != "=") throw ParseError("expected '='", c.line, c.col);
      skip_ws_and_comments(c, true);
      std::string list;
      while (!c.eof() && c.peek() != '\n' && c.peek() != '#') {
        list.push_back(c.peek());
        c.advance();
      }
      std::string body = list;
      while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r'))
        body.pop_back();
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("mu must be a bracketed list", line, col);
      body = body.substr(1, body.size() - 2);
      front.mu_left.clear();
      std::string item;
      std::istringstream is(body);
      while (std::getline(is, item, ',')) {
        std::string trimmed;
        for (char ch : item)
          if (ch != ' ' && ch != '\t') trimmed.push_back(ch);
        if (trimmed.empty()) throw ParseError("empty entry in mu list", line, col);
        front.mu_left.push_back(parse_int(trimmed, c));
      }
      saw_mu = true;
    } else if (tok == "x" || tok == "lc" || tok == "rc" || tok == "rc*" || tok == "bp") {
      skip_ws_and_comments(c, true);
      int k = parse_int(read_token(c), c);
      Slice s{};
      if (tok == "x") s = Slice::crossing(k);
      else if (tok == "rc") s = Slice::right_cusp(k, false);
      else if (tok == "rc*") s = Slice::right_cusp(k, true);
      else if (tok == "bp") s = Slice::base_point(k);
      else {
        s = Slice::left_cusp(k);
        skip_ws_and_comments(c, true);
        if (!c.eof() && c.peek() == '@') {
          c.advance();
          s.cusp_mu = parse_int(read_token(c), c);
        }
      }
      expect_line_end(c);
      front.slices.push_back(s);
    } else {
      throw ParseError("unknown token '" + tok + "'", line, col);
    }
  }

  if (!saw_r) throw ParseError("missing header 'r = <int>'", c.line, c.col);
  if (!saw_left) throw ParseError("missing header 'left = <int>'", c.line, c.col);
  if (front.n_left > 0 && !saw_mu)
    throw ParseError("missing header 'mu = [...]'", c.line, c.col);
  if (static_cast<int>(front.mu_left.size()) != front.n_left)
    throw ParseError("mu lists " + std::to_string(front.mu_left.size()) + " values for " +
                         std::to_string(front.n_left) + " left endpoints",
                     c.line, c.col);

  for (int& v : front.mu_left) v = reduce_mod(v, front.two_r());
  for (Slice& s : front.slices)
    if (s.kind == SliceKind::LeftCusp) s.cusp_mu = reduce_mod(s.cusp_mu, front.two_r());

  // Bounds pass; reports the offending slice by line-independent index.
  strand_counts(front);
  return front;
}

std::string serialize(const TangleFront& front) {
  std::ostringstream os;
  os << "r = " << front.r << "\n";
  os << "left = " << front.n_left << "\n";
  os << "mu = [";
  for (std::size_t i = 0; i < front.mu_left.size(); ++i) {
    if (i) os << ",";
    os << front.mu_left[i];
  }
  os << "]\n";
  for (const Slice& s : front.slices) {
    switch (s.kind) {
      case SliceKind::Crossing: os << "x " << s.pos; break;
      case SliceKind::LeftCusp:
        os << "lc " << s.pos;
        if (s.cusp_mu != 1) os << " @" << s.cusp_mu;
        break;
      case SliceKind::RightCusp: os << (s.marked ? "rc* " : "rc ") << s.pos; break;
      case SliceKind::BasePoint: os << "bp " << s.pos; break;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<int> strand_counts(const TangleFront& front) {
  std::vector<int> counts;
  counts.reserve(front.slices.size() + 1);
  int s = front.n_left;
  counts.push_back(s);
  for (std::size_t i = 0; i < front.slices.size(); ++i) {
    const Slice& sl = front.slices[i];
    auto fail = [&](const std::string& why) {
      throw InputError("slice " + std::to_string(i + 1) + ": " + why + " (strand count " +
                       std::to_string(s) + ")");
    };
    switch (sl.kind) {
      case SliceKind::Crossing:
        if (sl.pos < 1 || sl.pos > s - 1) fail("crossing position " + std::to_string(sl.pos) + " out of range");
        break;
      case SliceKind::LeftCusp:
        if (sl.pos < 1 || sl.pos > s + 1) fail("left cusp position " + std::to_string(sl.pos) + " out of range");
        s += 2;
        break;
      case SliceKind::RightCusp:
        if (sl.pos < 1 || sl.pos > s - 1) fail("right cusp position " + std::to_string(sl.pos) + " out of range");
        s -= 2;
        break;
      case SliceKind::BasePoint:
        if (sl.pos < 1 || sl.pos > s) fail("base point position " + std::to_string(sl.pos) + " out of range");
        break;
    }
    counts.push_back(s);
  }
  return counts;
}

PotentialTable propagate_potential(const TangleFront& front) {
  PotentialTable table;
  table.two_r = front.two_r();
  table.crossing_degree.assign(front.slices.size(), 0);
  table.cusp_sign.assign(front.slices.size(), 0);

  std::vector<int> mu = front.mu_left;
  table.mu.push_back(mu);
  strand_counts(front);  // bounds

  for (std::size_t i = 0; i < front.slices.size(); ++i) {
    const Slice& sl = front.slices[i];
    const int k = sl.pos - 1;
    switch (sl.kind) {
      case SliceKind::Crossing: {
        // The strand entering on top has the lesser slope, hence is the
        // over-strand; its potential comes first in the degree.
        long diff = long(mu[k]) - long(mu[k + 1]);
        table.crossing_degree[i] = reduce_mod(diff, table.two_r);
        std::swap(mu[k], mu[k + 1]);
        break;
      }
      case SliceKind::LeftCusp: {
        int upper = reduce_mod(sl.cusp_mu, table.two_r);
        int lower = reduce_mod(long(upper) - 1, table.two_r);
        mu.insert(mu.begin() + k, {upper, lower});
        break;
      }
      case SliceKind::RightCusp: {
        if (!congruent(mu[k], long(mu[k + 1]) + 1, table.two_r))
          throw InputError("slice " + std::to_string(i + 1) +
                           ": right cusp joins strands with potentials " + std::to_string(mu[k]) +
                           ", " + std::to_string(mu[k + 1]) +
                           " (upper must exceed lower by 1 mod " + std::to_string(table.two_r) + ")");
        table.cusp_sign[i] = right_moving(mu[k]) ? +1 : -1;  // down cusp iff upper strand right-moving
        mu.erase(mu.begin() + k, mu.begin() + k + 2);
        break;
      }
      case SliceKind::BasePoint:
        break;
    }
    table.mu.push_back(mu);
  }
  return table;
}

namespace {

// Union-find over strand segments, one root set per connected component.
class ComponentTracker {
public:
  explicit ComponentTracker(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

}  // namespace

Diagnostics validate(const TangleFront& front) {
  Diagnostics d;
  std::vector<int> counts;
  try {
    counts = strand_counts(front);
  } catch (const InputError& e) {
    d.strand_counts_ok = false;
    d.messages.push_back(e.what());
    return d;
  }
  try {
    propagate_potential(front);
  } catch (const InputError& e) {
    d.cusp_potentials_ok = false;
    d.messages.push_back(e.what());
  }

  // Segment ids per boundary; component = union across slices.
  std::vector<int> offset(counts.size());
  int total = 0;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    offset[b] = total;
    total += counts[b];
  }
  ComponentTracker comps(total);
  std::vector<int> cusp_component;
  std::vector<int> base_point_component;

  for (std::size_t i = 0; i < front.slices.size(); ++i) {
    const Slice& sl = front.slices[i];
    const int k = sl.pos - 1;
    const int nl = counts[i];
    auto left = [&](int j) { return offset[i] + j; };
    auto right = [&](int j) { return offset[i + 1] + j; };
    switch (sl.kind) {
      case SliceKind::Crossing:
        for (int j = 0; j < nl; ++j) {
          int img = j == k ? k + 1 : j == k + 1 ? k : j;
          comps.unite(left(j), right(img));
        }
        break;
      case SliceKind::LeftCusp:
        for (int j = 0; j < nl; ++j) comps.unite(left(j), right(j < k ? j : j + 2));
        comps.unite(right(k), right(k + 1));
        break;
      case SliceKind::RightCusp:
        for (int j = 0; j < nl; ++j)
          if (j != k && j != k + 1) comps.unite(left(j), right(j < k ? j : j - 2));
        comps.unite(left(k), left(k + 1));
        cusp_component.push_back(comps.find(left(k)));
        if (sl.marked) base_point_component.push_back(comps.find(left(k)));
        else d.all_right_cusps_marked = false;
        break;
      case SliceKind::BasePoint:
        for (int j = 0; j < nl; ++j) comps.unite(left(j), right(j));
        base_point_component.push_back(comps.find(left(k)));
        break;
    }
  }

  for (int rc : cusp_component) {
    bool found = false;
    for (int bp : base_point_component)
      if (comps.find(bp) == comps.find(rc)) {
        found = true;
        break;
      }
    if (!found) {
      d.base_point_hypothesis_ok = false;
      d.messages.push_back("a component containing a right cusp has no base point");
      break;
    }
  }
  if (right_cusp_count(front) == 0) d.all_right_cusps_marked = true;
  return d;
}

TangleFront compose(const TangleFront& t1, const TangleFront& t2) {
  if (t1.r != t2.r)
    throw InputError("cannot compose fronts with different Maslov moduli r=" +
                     std::to_string(t1.r) + " and r=" + std::to_string(t2.r));
  PotentialTable p1 = propagate_potential(t1);
  if (p1.n_right() != t2.n_left)
    throw InputError("boundary mismatch: " + std::to_string(p1.n_right()) +
                     " right endpoints composed with " + std::to_string(t2.n_left) + " left endpoints");
  for (int i = 0; i < t2.n_left; ++i)
    if (!congruent(p1.right_mu()[i], t2.mu_left[i], t1.two_r()))
      throw InputError("boundary potential mismatch at endpoint " + std::to_string(i + 1));
  TangleFront out = t1;
  out.slices.insert(out.slices.end(), t2.slices.begin(), t2.slices.end());
  return out;
}

ClassicalInvariants classical_invariants(const TangleFront& front) {
  PotentialTable table = propagate_potential(front);
  if (front.n_left != 0 || table.n_right() != 0)
    throw InputError("classical invariants are defined for closed fronts only");

  long long writhe = 0;
  long long up = 0, down = 0;
  for (std::size_t i = 0; i < front.slices.size(); ++i) {
    const Slice& sl = front.slices[i];
    const int k = sl.pos - 1;
    switch (sl.kind) {
      case SliceKind::Crossing:
        // Same-parity strands are parallel-oriented; such crossings are positive.
        writhe += congruent(table.crossing_degree[i], 0, 2) ? +1 : -1;
        break;
      case SliceKind::LeftCusp: {
        int upper = table.mu[i + 1][k];
        (right_moving(upper) ? up : down) += 1;
        break;
      }
      case SliceKind::RightCusp: {
        int upper = table.mu[i][k];
        (right_moving(upper) ? down : up) += 1;
        break;
      }
      case SliceKind::BasePoint:
        break;
    }
  }

  ClassicalInvariants inv;
  inv.tb = writhe - right_cusp_count(front);
  long long diff = up - down;
  if (diff % 2 == 0) {
    inv.rot_num = diff / 2;
    inv.rot_den = 1;
  } else {
    inv.rot_num = diff;
    inv.rot_den = 2;
  }
  return inv;
}

int right_cusp_count(const TangleFront& front) {
  int n = 0;
  for (const Slice& s : front.slices)
    if (s.kind == SliceKind::RightCusp) ++n;
  return n;
}

int base_point_count(const TangleFront& front) {
  int n = 0;
  for (const Slice& s : front.slices)
    if (s.kind == SliceKind::BasePoint || (s.kind == SliceKind::RightCusp && s.marked)) ++n;
  return n;
}

}  // namespace rulinglab
