#include "rulinglab/mcs.hpp"

#include <algorithm>

#include "rulinglab/ruling.hpp"

namespace rulinglab {

namespace {

Matrix event_matrix(const DiagramEvent& e, int n, const PrimeField& f) {
  Matrix m = Matrix::identity(n);
  if (e.kind == DiagramEvent::Kind::Handleslide) {
    m.at(e.hs.top, e.hs.bottom) = f.neg(e.hs.coeff);
  } else {
    int k = e.crossing_pos;
    m.at(k, k) = 0;
    m.at(k + 1, k + 1) = 0;
    m.at(k, k + 1) = 1;
    m.at(k + 1, k) = 1;
  }
  return m;
}

std::vector<int> mu_after(const HandleslideDiagram& d, std::size_t upto) {
  std::vector<int> mu = d.mu;
  for (std::size_t i = 0; i < upto && i < d.events.size(); ++i)
    if (d.events[i].kind == DiagramEvent::Kind::Crossing)
      std::swap(mu[d.events[i].crossing_pos], mu[d.events[i].crossing_pos + 1]);
  return mu;
}

}  // namespace

Matrix composite_matrix(const HandleslideDiagram& d, const PrimeField& f) {
  Matrix acc = Matrix::identity(d.strands);
  for (const DiagramEvent& e : d.events) acc = mul(f, acc, event_matrix(e, d.strands, f));
  return acc;
}

void check_diagram(const HandleslideDiagram& d) {
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    const DiagramEvent& e = d.events[i];
    if (e.kind == DiagramEvent::Kind::Crossing) {
      if (e.crossing_pos < 0 || e.crossing_pos + 1 >= d.strands)
        throw InputError("crossing position out of range");
      continue;
    }
    if (e.hs.top < 0 || e.hs.top >= e.hs.bottom || e.hs.bottom >= d.strands)
      throw InputError("handleslide endpoints out of range");
    if (e.hs.coeff != 0) {
      std::vector<int> mu = mu_after(d, i);
      if (!congruent(mu[e.hs.top], mu[e.hs.bottom], d.m))
        throw InputError("handleslide at event " + std::to_string(i) +
                         " joins strands of different potential mod m");
    }
  }
}

bool handleslide_less(const Handleslide& a, const Handleslide& b) {
  if (a.top != b.top) return a.top > b.top;
  return a.bottom < b.bottom;
}

bool properly_ordered(const HandleslideDiagram& d, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (d.events[i].kind != DiagramEvent::Kind::Handleslide) return false;
  for (std::size_t i = begin; i + 1 < end; ++i)
    if (!handleslide_less(d.events[i].hs, d.events[i + 1].hs)) return false;
  return true;
}

namespace {

bool reverse_properly_ordered(const HandleslideDiagram& d, std::size_t begin, std::size_t end) {
  HandleslideDiagram rev = d;
  rev.events.clear();
  for (std::size_t i = end; i > begin; --i) rev.events.push_back(d.events[i - 1]);
  return properly_ordered(rev, 0, end - begin);
}

// Factors a graded unit upper-triangular matrix into handleslides, either
// properly ordered (tops descending left to right) or the reverse. Rows are
// peeled from the largest top down: at that point row t of the remaining
// product equals its own factor's row, so r_{tb} = -W[t][b].
std::vector<Handleslide> refactor_unitriangular(Matrix w, const std::vector<int>& mu, int m,
                                                const PrimeField& f, bool ordered) {
  const int n = w.rows();
  for (int i = 0; i < n; ++i) {
    if (w.at(i, i) != 1) throw InternalError("refactor: matrix is not unipotent");
    for (int j = 0; j < i; ++j)
      if (w.at(i, j) != 0) throw InternalError("refactor: matrix is not upper triangular");
  }
  std::vector<std::vector<Handleslide>> rows(n);
  for (int t = n - 2; t >= 0; --t) {
    std::vector<Handleslide> row;
    std::vector<FieldElem> r(n, 0);
    for (int b = t + 1; b < n; ++b) {
      r[b] = f.neg(w.at(t, b));
      if (r[b] == 0) continue;
      if (!congruent(mu[t], mu[b], m))
        throw InternalError("refactor: entry violates the grading");
      row.push_back({t, b, r[b]});
    }
    if (ordered) {
      // Peel on the left: W := L_t^{-1} W only rewrites row t.
      for (int b = t + 1; b < n; ++b) w.at(t, b) = 0;
    } else {
      // Peel on the right: W := W L_t^{-1} adds column t into the later ones.
      for (int i = 0; i < t; ++i) {
        FieldElem wit = w.at(i, t);
        if (wit == 0) continue;
        for (int b = t + 1; b < n; ++b)
          w.at(i, b) = f.add(w.at(i, b), f.mul(wit, r[b]));
      }
      for (int b = t + 1; b < n; ++b) w.at(t, b) = 0;
    }
    rows[t] = std::move(row);
  }
  std::vector<Handleslide> out;
  if (ordered) {
    for (int t = n - 2; t >= 0; --t)
      for (const Handleslide& h : rows[t]) out.push_back(h);  // bottoms ascending
  } else {
    for (int t = 0; t <= n - 2; ++t)
      for (auto it = rows[t].rbegin(); it != rows[t].rend(); ++it) out.push_back(*it);
  }
  return out;
}

}  // namespace

HandleslideDiagram apply_move(const HandleslideDiagram& d, const Move& move,
                              const PrimeField& f) {
  check_diagram(d);
  HandleslideDiagram out = d;
  auto& ev = out.events;
  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw InputError("move precondition violated: " + what);
  };
  auto is_hs = [&](std::size_t i) {
    return i < ev.size() && ev[i].kind == DiagramEvent::Kind::Handleslide;
  };

  switch (move.kind) {
    case Move::Kind::RemoveZero: {
      require(is_hs(move.index), "no handleslide at index");
      require(ev[move.index].hs.coeff == 0, "handleslide coefficient is not zero");
      ev.erase(ev.begin() + move.index);
      break;
    }
    case Move::Kind::IntroduceZero: {
      require(move.index <= ev.size(), "index out of range");
      require(0 <= move.top && move.top < move.bottom && move.bottom < d.strands,
              "bad endpoints");
      ev.insert(ev.begin() + move.index, DiagramEvent::handleslide(move.top, move.bottom, 0));
      break;
    }
    case Move::Kind::SlidePastCrossing: {
      require(is_hs(move.index), "no handleslide at index");
      std::size_t cpos = move.to_left ? move.index - 1 : move.index + 1;
      require(move.index > 0 || !move.to_left, "no event to the left");
      require(cpos < ev.size() && ev[cpos].kind == DiagramEvent::Kind::Crossing,
              "adjacent event is not a crossing");
      int k = ev[cpos].crossing_pos;
      Handleslide h = ev[move.index].hs;
      require(!(h.top == k && h.bottom == k + 1), "handleslide spans the crossing strands");
      auto tau = [&](int s) { return s == k ? k + 1 : s == k + 1 ? k : s; };
      Handleslide moved{std::min(tau(h.top), tau(h.bottom)), std::max(tau(h.top), tau(h.bottom)),
                        h.coeff};
      std::swap(ev[move.index], ev[cpos]);
      ev[move.to_left ? move.index : cpos].kind = DiagramEvent::Kind::Handleslide;
      ev[move.to_left ? move.index : cpos] = DiagramEvent::handleslide(moved.top, moved.bottom, moved.coeff);
      ev[move.to_left ? cpos : move.index] = DiagramEvent::crossing(k);
      break;
    }
    case Move::Kind::Interchange: {
      require(is_hs(move.index) && is_hs(move.index + 1), "two adjacent handleslides required");
      Handleslide h1 = ev[move.index].hs;
      Handleslide h2 = ev[move.index + 1].hs;
      require(!(h1.top == h2.top && h1.bottom == h2.bottom),
              "equal endpoints: use a merge move");
      ev[move.index] = DiagramEvent::handleslide(h2.top, h2.bottom, h2.coeff);
      ev[move.index + 1] = DiagramEvent::handleslide(h1.top, h1.bottom, h1.coeff);
      if (h1.bottom == h2.top) {
        FieldElem c = f.neg(f.mul(h1.coeff, h2.coeff));
        if (c != 0)
          ev.insert(ev.begin() + move.index + 2,
                    DiagramEvent::handleslide(h1.top, h2.bottom, c));
      } else if (h2.bottom == h1.top) {
        FieldElem c = f.mul(h1.coeff, h2.coeff);
        if (c != 0)
          ev.insert(ev.begin() + move.index + 2,
                    DiagramEvent::handleslide(h2.top, h1.bottom, c));
      }
      break;
    }
    case Move::Kind::Merge: {
      require(is_hs(move.index) && is_hs(move.index + 1), "two adjacent handleslides required");
      Handleslide h1 = ev[move.index].hs;
      Handleslide h2 = ev[move.index + 1].hs;
      require(h1.top == h2.top && h1.bottom == h2.bottom, "endpoints differ");
      ev[move.index].hs.coeff = f.add(h1.coeff, h2.coeff);
      ev.erase(ev.begin() + move.index + 1);
      break;
    }
    case Move::Kind::IntroduceCancelingPair: {
      require(move.index <= ev.size(), "index out of range");
      require(0 <= move.top && move.top < move.bottom && move.bottom < d.strands,
              "bad endpoints");
      ev.insert(ev.begin() + move.index,
                {DiagramEvent::handleslide(move.top, move.bottom, move.coeff),
                 DiagramEvent::handleslide(move.top, move.bottom, f.neg(move.coeff))});
      break;
    }
    case Move::Kind::Incorporate: {
      require(move.range_begin < move.range_end && move.range_end <= ev.size(),
              "bad collection range");
      require(move.index == move.range_end || move.index + 1 == move.range_begin,
              "handleslide is not adjacent to the collection");
      require(is_hs(move.index), "no handleslide at index");
      bool ordered = properly_ordered(out, move.range_begin, move.range_end);
      require(ordered || reverse_properly_ordered(out, move.range_begin, move.range_end),
              "collection is not properly ordered either way");
      std::size_t lo = std::min(move.range_begin, move.index);
      std::size_t hi = std::max(move.range_end, move.index + 1);
      HandleslideDiagram strip = out;
      strip.events.assign(ev.begin() + lo, ev.begin() + hi);
      strip.mu = mu_after(out, lo);
      Matrix m = composite_matrix(strip, f);
      std::vector<Handleslide> collection =
          refactor_unitriangular(m, strip.mu, d.m, f, ordered);
      std::vector<DiagramEvent> replaced;
      for (const Handleslide& h : collection)
        replaced.push_back(DiagramEvent::handleslide(h.top, h.bottom, h.coeff));
      ev.erase(ev.begin() + lo, ev.begin() + hi);
      ev.insert(ev.begin() + lo, replaced.begin(), replaced.end());
      break;
    }
    case Move::Kind::RemoveFromCollection: {
      require(move.range_begin <= move.index && move.index < move.range_end &&
                  move.range_end <= ev.size(),
              "handleslide is not inside the collection");
      require(is_hs(move.index), "no handleslide at index");
      bool ordered = properly_ordered(out, move.range_begin, move.range_end);
      require(ordered || reverse_properly_ordered(out, move.range_begin, move.range_end),
              "collection is not properly ordered either way");
      Handleslide h = ev[move.index].hs;
      HandleslideDiagram strip = out;
      strip.events.assign(ev.begin() + move.range_begin, ev.begin() + move.range_end);
      strip.mu = mu_after(out, move.range_begin);
      Matrix m = composite_matrix(strip, f);
      // Peel h off the requested side: the remaining collection composes to
      // h^-1 * M or M * h^-1.
      Matrix hm = Matrix::identity(d.strands);
      hm.at(h.top, h.bottom) = h.coeff;  // inverse of the handleslide matrix
      Matrix rest = move.to_left ? mul(f, hm, m) : mul(f, m, hm);
      std::vector<Handleslide> collection = refactor_unitriangular(rest, strip.mu, d.m, f, ordered);
      std::vector<DiagramEvent> replaced;
      if (move.to_left) replaced.push_back(DiagramEvent::handleslide(h.top, h.bottom, h.coeff));
      for (const Handleslide& c : collection)
        replaced.push_back(DiagramEvent::handleslide(c.top, c.bottom, c.coeff));
      if (!move.to_left) replaced.push_back(DiagramEvent::handleslide(h.top, h.bottom, h.coeff));
      ev.erase(ev.begin() + move.range_begin, ev.begin() + move.range_end);
      ev.insert(ev.begin() + move.range_begin, replaced.begin(), replaced.end());
      break;
    }
  }
  check_diagram(out);
  return out;
}

// --- slice transfer ----------------------------------------------------------

namespace {

Matrix conjugate(const PrimeField& f, const Matrix& d, const Matrix& phi) {
  return mul(f, mul(f, inverse(f, phi), d), phi);
}

}  // namespace

TransferOutcome transfer_slice(const FilteredComplex& state, const Slice& slice,
                               FieldElem value, const PotentialTable& table,
                               int slice_index) {
  const PrimeField& f = state.field;
  const int n = state.size();
  const int k = slice.pos - 1;
  TransferOutcome out;

  switch (slice.kind) {
    case SliceKind::Crossing: {
      if (state.d.at(k, k + 1) != 0) return out;  // no augmentation extends
      // phi = s_k after the handleslide with coefficient -value.
      Matrix phi = Matrix::identity(n);
      phi.at(k, k + 1) = value;  // row k of H_{-value}: e_k + value * e_{k+1}
      Matrix sk = Matrix::identity(n);
      sk.at(k, k) = 0;
      sk.at(k + 1, k + 1) = 0;
      sk.at(k, k + 1) = 1;
      sk.at(k + 1, k) = 1;
      phi = mul(f, phi, sk);
      FilteredComplex next = state;
      next.mu = table.mu[slice_index + 1];
      next.d = conjugate(f, state.d, phi);
      if (next.d.at(k, k + 1) != 0)
        throw InternalError("crossing transfer left a nonzero pivot entry");
      out.next = std::move(next);
      break;
    }
    case SliceKind::LeftCusp: {
      FilteredComplex next = state;
      next.mu = table.mu[slice_index + 1];
      next.d = Matrix(n + 2, n + 2);
      auto shift = [&](int i) { return i < k ? i : i + 2; };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) next.d.at(shift(i), shift(j)) = state.d.at(i, j);
      next.d.at(k, k + 1) = f.sign(next.mu[k]);
      out.next = std::move(next);
      break;
    }
    case SliceKind::RightCusp: {
      Matrix dprime = state.d;
      if (value != 0) {
        Matrix h = Matrix::identity(n);
        h.at(k, k + 1) = value;  // H_{-value}
        dprime = conjugate(f, state.d, h);
      }
      FieldElem pivot = dprime.at(k, k + 1);
      if (pivot == 0) return out;
      if (slice.marked) {
        // pivot = (-1)^{mu(k)} * (-unit^sigma)
        FieldElem u = f.mul(f.sign(table.mu[slice_index][k] + 1), pivot);
        out.determined_unit = table.cusp_sign[slice_index] == 1 ? u : f.inv(u);
      } else if (pivot != f.sign(table.mu[slice_index][k] + 1)) {
        return out;  // without a base point the pivot is pinned
      }
      // Quotient by span{e_k, d e_k}: e_k drops, e_{k+1} is rewritten through
      // the pivot row.
      FilteredComplex next = state;
      next.mu = table.mu[slice_index + 1];
      next.d = Matrix(n - 2, n - 2);
      FieldElem inv_pivot = f.inv(pivot);
      auto shift = [&](int i) { return i < k ? i : i - 2; };
      for (int i = 0; i < n; ++i) {
        if (i == k || i == k + 1) continue;
        for (int j = 0; j < n; ++j) {
          if (j == k || j == k + 1) continue;
          FieldElem v = dprime.at(i, j);
          FieldElem via = f.mul(dprime.at(i, k + 1), f.mul(inv_pivot, dprime.at(k, j)));
          next.d.at(shift(i), shift(j)) = f.sub(v, via);
        }
      }
      out.next = std::move(next);
      break;
    }
    case SliceKind::BasePoint: {
      FieldElem lambda = right_moving(table.mu[slice_index][k]) ? value : f.inv(value);
      FilteredComplex next = state;
      FieldElem inv_lambda = f.inv(lambda);
      for (int j = 0; j < n; ++j) next.d.at(k, j) = f.mul(next.d.at(k, j), inv_lambda);
      for (int i = 0; i < n; ++i) next.d.at(i, k) = f.mul(next.d.at(i, k), lambda);
      out.next = std::move(next);
      break;
    }
  }
  return out;
}

FilteredComplex boundary_complex(const IsoType& rho, const std::vector<int>& mu, int m,
                                 const PrimeField& f) {
  return canonical_complex(rho, mu, m, f);
}

std::map<int, int> homology_dimensions(const FilteredComplex& c) {
  const int n = c.size();
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[reduce_mod(c.mu[i], c.m)].push_back(i);

  auto rank_rows = [&](const std::vector<int>& rows) {
    Matrix sub(static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < n; ++j) sub.at(static_cast<int>(i), j) = c.d.at(rows[i], j);
    return rank(c.field, sub);
  };

  std::map<int, int> dims;
  for (const auto& [cls, rows] : classes) {
    int dim = static_cast<int>(rows.size()) - rank_rows(rows);
    int cls_above = reduce_mod(long(cls) + 1, c.m);
    auto above = classes.find(cls_above);
    if (above != classes.end() && !(c.m == 1 && false)) dim -= rank_rows(above->second);
    if (dim != 0) dims[cls] = dim;
  }
  return dims;
}

namespace {

struct SweepContext {
  const TangleFront& front;
  const PotentialTable& table;
  int m;
  const PrimeField& field;
  const IsoType& target;
  const SweepOptions& options;

  SweepResult result;
  ParamAssignment current;

  void record(int slice, ParamKind kind, FieldElem v) { current.push_back({slice, kind, v}); }

  void visit(std::size_t slice_index, const FilteredComplex& state) {
    if (++result.branches_visited > options.budget)
      throw BudgetExceeded("sweep exceeded the assignment budget of " +
                           std::to_string(options.budget));
    if (slice_index == front.slices.size()) {
      if (barannikov(state) == target) {
        ++result.count;
        if (options.collect_witnesses) result.witnesses.push_back(current);
      }
      return;
    }
    const Slice& sl = front.slices[slice_index];
    const int si = static_cast<int>(slice_index);

    std::map<int, int> dims_before;
    if (options.check_invariants) dims_before = homology_dimensions(state);

    auto advance = [&](FieldElem value, ParamKind kind, bool record_param) {
      TransferOutcome outcome = transfer_slice(state, sl, value, table, si);
      if (!outcome.next) return;
      if (options.check_invariants) {
        check_complex(*outcome.next);
        if (homology_dimensions(*outcome.next) != dims_before)
          throw InternalError("slice transfer changed homology dimensions");
      }
      std::size_t mark = current.size();
      if (record_param) record(si, kind, value);
      if (outcome.determined_unit) record(si, ParamKind::BasePointUnit, *outcome.determined_unit);
      visit(slice_index + 1, *outcome.next);
      current.resize(mark);
    };

    switch (sl.kind) {
      case SliceKind::Crossing:
        if (table.degree_zero(si, m)) {
          for (FieldElem v = 0; v < field.q(); ++v) advance(v, ParamKind::CrossingValue, true);
        } else {
          advance(0, ParamKind::CrossingValue, true);
        }
        break;
      case SliceKind::LeftCusp:
        advance(0, ParamKind::CrossingValue, false);
        break;
      case SliceKind::RightCusp:
        if (m == 1) {
          for (FieldElem v = 0; v < field.q(); ++v) advance(v, ParamKind::CuspValue, true);
        } else {
          advance(0, ParamKind::CuspValue, false);
        }
        break;
      case SliceKind::BasePoint:
        for (FieldElem v = 1; v < field.q(); ++v) advance(v, ParamKind::BasePointUnit, true);
        break;
    }
  }
};

}  // namespace

SweepResult sweep_enumerate(const TangleFront& front, int m, const PrimeField& f,
                            const FilteredComplex& eps_left, const IsoType& rho_right,
                            const SweepOptions& options) {
  check_modulus_for_sweep(front, m);
  PotentialTable table = propagate_potential(front);
  Diagnostics diag = validate(front);
  if (!diag.base_point_hypothesis_ok)
    throw HypothesisError("a component containing a right cusp carries no base point");
  if (eps_left.size() != front.n_left || eps_left.m != m || !(eps_left.field == f))
    throw InputError("left boundary complex does not match the front");
  for (int i = 0; i < front.n_left; ++i)
    if (!congruent(eps_left.mu[i], front.mu_left[i], front.two_r() == 0 ? 0 : m))
      throw InputError("left boundary potentials do not match the front");
  check_complex(eps_left);
  if (rho_right.size() != table.n_right())
    throw InputError("right boundary type size mismatch");

  FilteredComplex start = eps_left;
  start.mu = table.left_mu();

  SweepContext ctx{front, table, m, f, rho_right, options, {}, {}};
  ctx.visit(0, start);
  return std::move(ctx.result);
}

}  // namespace rulinglab
