#include "gcat/morphism.hpp"

#include <algorithm>
#include <sstream>

namespace gcat {

std::string SumObject::str(const FusionCategorySpec& spec) const {
  std::ostringstream os;
  if (words.empty()) return "0";
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) os << " (+) ";
    if (words[i].empty()) os << "1";
    for (size_t j = 0; j < words[i].size(); ++j)
      os << (j ? "." : "") << spec.simple_names[words[i][j]];
  }
  return os.str();
}

bool Morphism::is_zero() const {
  for (const auto& [c, m] : blk)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::operator==(const Morphism& o) const {
  if (!(src == o.src) || !(dst == o.dst)) return false;
  auto nonzero = [](const std::map<int, Mat>& b) {
    std::map<int, Mat> out;
    for (const auto& [c, m] : b)
      if (!m.is_zero()) out.emplace(c, m);
    return out;
  };
  return nonzero(blk) == nonzero(o.blk);
}

int PathTable::index_of(int c, const FusionPath& p) const {
  const auto& list = by_target[c];
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == p) return static_cast<int>(i);
  throw internal_error("fusion path not found in table");
}

Calc::Calc(const FusionCategorySpec& spec) : spec_(spec) {
  ev_norm_.resize(spec.num_simples());
  tev_norm_.resize(spec.num_simples());
}

const PathTable& Calc::table(int start, const Word& w) {
  auto key = std::make_pair(start, w);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  int m = spec_.num_simples();
  std::vector<std::vector<FusionPath>> cur(m);
  cur[start].push_back(FusionPath{});
  for (int letter : w) {
    std::vector<std::vector<FusionPath>> nxt(m);
    for (int c = 0; c < m; ++c) {
      for (int y = 0; y < m; ++y) {
        int mult = spec_.n(y, letter, c);
        if (mult == 0) continue;
        for (const auto& p : cur[y])
          for (int mu = 0; mu < mult; ++mu) {
            FusionPath q = p;
            q.steps.emplace_back(c, mu);
            nxt[c].push_back(std::move(q));
          }
      }
    }
    cur = std::move(nxt);
  }
  PathTable t;
  t.by_target = std::move(cur);
  return tables_.emplace(std::move(key), std::move(t)).first->second;
}

size_t Calc::block_dim(int c, const SumObject& x) {
  size_t d = 0;
  for (const auto& w : x.words) d += table(spec_.unit, w).by_target[c].size();
  return d;
}

size_t Calc::summand_offset(int c, const SumObject& x, size_t k) {
  size_t d = 0;
  for (size_t i = 0; i < k; ++i) d += table(spec_.unit, x.words[i]).by_target[c].size();
  return d;
}

Morphism Calc::id(const SumObject& x) {
  Morphism f{x, x, {}};
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t d = block_dim(c, x);
    if (d) f.blk[c] = Mat::identity(d);
  }
  return f;
}

Morphism Calc::zero(const SumObject& src, const SumObject& dst) { return Morphism{src, dst, {}}; }

Morphism Calc::path_vector(const Word& w, int c, int i) {
  Morphism f{SumObject::of(Word{c}), SumObject::of(w), {}};
  size_t rows = block_dim(c, f.dst);
  Mat m(rows, 1);
  m.at(static_cast<size_t>(i), 0) = Scalar::one();
  f.blk[c] = m;
  return f;
}

Morphism Calc::path_covector(const Word& w, int c, int i) {
  Morphism f{SumObject::of(w), SumObject::of(Word{c}), {}};
  size_t cols = block_dim(c, f.src);
  Mat m(1, cols);
  m.at(0, static_cast<size_t>(i)) = Scalar::one();
  f.blk[c] = m;
  return f;
}

Morphism Calc::inject(const SumObject& x, size_t k) {
  Morphism f{SumObject::of(x.words[k]), x, {}};
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dk = table(spec_.unit, x.words[k]).by_target[c].size();
    if (!dk) continue;
    Mat m(block_dim(c, x), dk);
    size_t off = summand_offset(c, x, k);
    for (size_t i = 0; i < dk; ++i) m.at(off + i, i) = Scalar::one();
    f.blk[c] = m;
  }
  return f;
}

Morphism Calc::project(const SumObject& x, size_t k) {
  Morphism f{x, SumObject::of(x.words[k]), {}};
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dk = table(spec_.unit, x.words[k]).by_target[c].size();
    if (!dk) continue;
    Mat m(dk, block_dim(c, x));
    size_t off = summand_offset(c, x, k);
    for (size_t i = 0; i < dk; ++i) m.at(i, off + i) = Scalar::one();
    f.blk[c] = m;
  }
  return f;
}

Morphism Calc::compose(const Morphism& g, const Morphism& f) {
  if (!(f.dst == g.src)) throw math_error("compose: object mismatch");
  Morphism h{f.src, g.dst, {}};
  for (const auto& [c, gm] : g.blk) {
    auto it = f.blk.find(c);
    if (it == f.blk.end()) continue;
    Mat prod = gm * it->second;
    if (!prod.is_zero()) h.blk[c] = std::move(prod);
  }
  return h;
}

Morphism Calc::add(const Morphism& f, const Morphism& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw math_error("add: object mismatch");
  Morphism h = f;
  for (const auto& [c, gm] : g.blk) {
    auto it = h.blk.find(c);
    if (it == h.blk.end())
      h.blk[c] = gm;
    else
      it->second = it->second + gm;
  }
  return h;
}

Morphism Calc::sub(const Morphism& f, const Morphism& g) {
  return add(f, scale(Scalar(-1), g));
}

Morphism Calc::scale(const Scalar& s, const Morphism& f) {
  Morphism h = f;
  for (auto& [c, m] : h.blk) m = m * s;
  return h;
}

SumObject Calc::tensor_obj(const SumObject& x, const SumObject& y) {
  SumObject z;
  for (const auto& wx : x.words)
    for (const auto& wy : y.words) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      z.words.push_back(std::move(w));
    }
  return z;
}

// f (x) id_z : blocks act on the prefix part of concatenated paths.
Morphism Calc::tensor_id_right(const Morphism& f, const SumObject& z) {
  SumObject src = tensor_obj(f.src, z), dst = tensor_obj(f.dst, z);
  Morphism h{src, dst, {}};
  int m = spec_.num_simples();
  for (int c = 0; c < m; ++c) {
    size_t rows = block_dim(c, dst), cols = block_dim(c, src);
    if (!rows || !cols) continue;
    Mat out(rows, cols);
    bool nonzero = false;
    for (size_t iw = 0; iw < f.src.words.size(); ++iw) {
      const Word& xw = f.src.words[iw];
      for (size_t jz = 0; jz < z.words.size(); ++jz) {
        const Word& zw = z.words[jz];
        size_t col_sum = iw * z.words.size() + jz;
        size_t col_off = summand_offset(c, src, col_sum);
        const auto& concat_src = table(spec_.unit, src.words[col_sum]);
        for (int e = 0; e < m; ++e) {
          const auto& px = table(spec_.unit, xw).by_target[e];
          const auto& qz = table(e, zw).by_target[c];
          if (px.empty() || qz.empty()) continue;
          auto fit = f.blk.find(e);
          if (fit == f.blk.end()) continue;
          const Mat& fe = fit->second;
          for (size_t ip = 0; ip < px.size(); ++ip) {
            size_t col_in_f = summand_offset(e, f.src, iw) + ip;
            for (size_t uw = 0; uw < f.dst.words.size(); ++uw) {
              const auto& py = table(spec_.unit, f.dst.words[uw]).by_target[e];
              size_t row_base_f = summand_offset(e, f.dst, uw);
              size_t row_sum = uw * z.words.size() + jz;
              size_t row_off = summand_offset(c, dst, row_sum);
              const auto& concat_dst = table(spec_.unit, dst.words[row_sum]);
              for (size_t ipy = 0; ipy < py.size(); ++ipy) {
                const Scalar& coeff = fe.at(row_base_f + ipy, col_in_f);
                if (coeff.is_zero()) continue;
                for (size_t iq = 0; iq < qz.size(); ++iq) {
                  FusionPath colp = px[ip];
                  colp.steps.insert(colp.steps.end(), qz[iq].steps.begin(), qz[iq].steps.end());
                  FusionPath rowp = py[ipy];
                  rowp.steps.insert(rowp.steps.end(), qz[iq].steps.begin(), qz[iq].steps.end());
                  size_t ci = col_off + concat_src.index_of(c, colp);
                  size_t ri = row_off + concat_dst.index_of(c, rowp);
                  out.at(ri, ci) += coeff;
                  nonzero = true;
                }
              }
            }
          }
        }
      }
    }
    if (nonzero) h.blk[c] = std::move(out);
  }
  return h;
}

// id_z (x) g : conjugate g's blocks into paths-from-e coordinates.
Morphism Calc::tensor_id_left(const SumObject& z, const Morphism& g) {
  SumObject src = tensor_obj(z, g.src), dst = tensor_obj(z, g.dst);
  Morphism h{src, dst, {}};
  int m = spec_.num_simples();
  for (int c = 0; c < m; ++c) {
    size_t rows = block_dim(c, dst), cols = block_dim(c, src);
    if (!rows || !cols) continue;
    Mat out(rows, cols);
    bool nonzero = false;
    for (size_t iz = 0; iz < z.words.size(); ++iz) {
      const Word& zw = z.words[iz];
      for (int e = 0; e < m; ++e) {
        const auto& pz = table(spec_.unit, zw).by_target[e];
        if (pz.empty()) continue;
        for (size_t jx = 0; jx < g.src.words.size(); ++jx) {
          const Word& xw = g.src.words[jx];
          const auto& qx = table(e, xw).by_target[c];
          if (qx.empty()) continue;
          const Mat& omx = omega(e, xw, c);
          auto rows_x = omega_rows(e, xw, c);
          size_t col_sum = iz * g.src.words.size() + jx;
          size_t col_off = summand_offset(c, src, col_sum);
          const auto& concat_src = table(spec_.unit, src.words[col_sum]);
          for (size_t uy = 0; uy < g.dst.words.size(); ++uy) {
            const Word& yw = g.dst.words[uy];
            const auto& qy = table(e, yw).by_target[c];
            if (qy.empty()) continue;
            const Mat& omy_inv = omega_inv(e, yw, c);
            auto rows_y = omega_rows(e, yw, c);
            // build the conjugated action G[q', q]
            Mat mid(rows_y.size(), rows_x.size());
            bool mid_nonzero = false;
            for (size_t ry = 0; ry < rows_y.size(); ++ry) {
              for (size_t rx = 0; rx < rows_x.size(); ++rx) {
                if (rows_y[ry][0] != rows_x[rx][0] || rows_y[ry][1] != rows_x[rx][1]) continue;
                int cp = rows_x[rx][0];
                auto git = g.blk.find(cp);
                if (git == g.blk.end()) continue;
                size_t gr = summand_offset(cp, g.dst, uy) + rows_y[ry][2];
                size_t gc = summand_offset(cp, g.src, jx) + rows_x[rx][2];
                const Scalar& v = git->second.at(gr, gc);
                if (v.is_zero()) continue;
                mid.at(ry, rx) = v;
                mid_nonzero = true;
              }
            }
            if (!mid_nonzero) continue;
            Mat G = omy_inv * mid * omx;
            size_t row_sum = iz * g.dst.words.size() + uy;
            size_t row_off = summand_offset(c, dst, row_sum);
            const auto& concat_dst = table(spec_.unit, dst.words[row_sum]);
            for (size_t ip = 0; ip < pz.size(); ++ip) {
              for (size_t iq = 0; iq < qx.size(); ++iq) {
                for (size_t iqy = 0; iqy < qy.size(); ++iqy) {
                  const Scalar& v = G.at(iqy, iq);
                  if (v.is_zero()) continue;
                  FusionPath colp = pz[ip];
                  colp.steps.insert(colp.steps.end(), qx[iq].steps.begin(), qx[iq].steps.end());
                  FusionPath rowp = pz[ip];
                  rowp.steps.insert(rowp.steps.end(), qy[iqy].steps.begin(), qy[iqy].steps.end());
                  size_t ci = col_off + concat_src.index_of(c, colp);
                  size_t ri = row_off + concat_dst.index_of(c, rowp);
                  out.at(ri, ci) += v;
                  nonzero = true;
                }
              }
            }
          }
        }
      }
    }
    if (nonzero) h.blk[c] = std::move(out);
  }
  return h;
}

Morphism Calc::tensor(const Morphism& f, const Morphism& g) {
  return compose(tensor_id_right(f, g.dst), tensor_id_left(f.src, g));
}

std::vector<std::array<int, 3>> Calc::omega_rows(int e, const Word& w, int c) {
  std::vector<std::array<int, 3>> rows;
  for (int cp = 0; cp < spec_.num_simples(); ++cp) {
    int mult = spec_.n(e, cp, c);
    if (!mult) continue;
    size_t np = table(spec_.unit, w).by_target[cp].size();
    for (int nu = 0; nu < mult; ++nu)
      for (size_t r = 0; r < np; ++r) rows.push_back({cp, nu, static_cast<int>(r)});
  }
  return rows;
}

const Mat& Calc::omega(int e, const Word& w, int c) {
  auto key = std::make_tuple(e, w, c);
  auto it = omega_.find(key);
  if (it != omega_.end()) return it->second;

  auto rows = omega_rows(e, w, c);
  const auto& cols = table(e, w).by_target[c];
  Mat om(rows.size(), cols.size());
  auto row_index = [&](int cp, int nu, int r) -> size_t {
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i][0] == cp && rows[i][1] == nu && rows[i][2] == r) return i;
    throw internal_error("omega row not found");
  };

  if (w.empty()) {
    if (c == e)
      for (size_t i = 0; i < cols.size(); ++i) om.at(i, i) = Scalar::one();
  } else {
    Word w0(w.begin(), w.end() - 1);
    int a = w.back();
    const auto& t0_from_e = table(e, w0);
    const auto& t0_from_1 = table(spec_.unit, w0);
    const auto& tw = table(spec_.unit, w);
    for (size_t col = 0; col < cols.size(); ++col) {
      // decompose the column path as (prefix r through w0 ending at y, last step mu)
      const FusionPath& p = cols[col];
      FusionPath prefix;
      prefix.steps.assign(p.steps.begin(), p.steps.end() - 1);
      int y = w0.empty() ? e : prefix.steps.back().first;
      int mu = p.steps.back().second;
      const Mat& om0 = omega(e, w0, y);
      auto rows0 = omega_rows(e, w0, y);
      size_t col0 = t0_from_e.index_of(y, prefix);
      for (size_t r0 = 0; r0 < rows0.size(); ++r0) {
        const Scalar& base = om0.at(r0, col0);
        if (base.is_zero()) continue;
        int up = rows0[r0][0], nu1 = rows0[r0][1], r1 = rows0[r0][2];
        // F-move: left tree (y, nu1, mu) over (e, up, a; c) -> right tree
        Mat F = f_matrix_cached(e, up, a, c);
        auto lb = spec_.left_tree_basis(e, up, a, c);
        auto rb = spec_.right_tree_basis(e, up, a, c);
        size_t li = lb.size();
        for (size_t i = 0; i < lb.size(); ++i)
          if (lb[i][0] == y && lb[i][1] == nu1 && lb[i][2] == mu) { li = i; break; }
        if (li == lb.size()) throw internal_error("omega: left tree index missing");
        for (size_t j = 0; j < rb.size(); ++j) {
          const Scalar& fv = F.at(li, j);
          if (fv.is_zero()) continue;
          int cp = rb[j][0], rho = rb[j][1], sigma = rb[j][2];
          FusionPath ext = t0_from_1.by_target[up][static_cast<size_t>(r1)];
          ext.steps.emplace_back(cp, rho);
          int r_new = tw.index_of(cp, ext);
          om.at(row_index(cp, sigma, r_new), col) += base * fv;
        }
      }
    }
  }
  return omega_.emplace(std::move(key), std::move(om)).first->second;
}

const Mat& Calc::omega_inv(int e, const Word& w, int c) {
  auto key = std::make_tuple(e, w, c);
  auto it = omega_inv_.find(key);
  if (it != omega_inv_.end()) return it->second;
  Mat inv = omega(e, w, c).inverse();
  return omega_inv_.emplace(std::move(key), std::move(inv)).first->second;
}

Mat Calc::f_matrix_cached(int a, int b, int c, int d) {
  auto key = std::array<int, 4>{a, b, c, d};
  auto it = fmat_.find(key);
  if (it != fmat_.end()) return it->second;
  Mat m = spec_.f_matrix(a, b, c, d);
  fmat_.emplace(key, m);
  return m;
}

// ---------------- duality ----------------

Word Calc::dual_word(const Word& w) {
  Word d;
  for (auto it = w.rbegin(); it != w.rend(); ++it) d.push_back(spec_.dual[*it]);
  return d;
}

SumObject Calc::dual_obj(const SumObject& x) {
  SumObject d;
  for (const auto& w : x.words) d.words.push_back(dual_word(w));
  return d;
}

const Scalar& Calc::ev_norm(int a) {
  if (ev_norm_[a]) return *ev_norm_[a];
  int as = spec_.dual[a];
  // raw coev: unit -> (a, a*); raw ev: (a*, a) -> unit
  Morphism coev_raw{SumObject::unit(), SumObject::of(Word{a, as}), {}};
  {
    Mat m(block_dim(spec_.unit, coev_raw.dst), 1);
    if (m.rows() != 1)
      throw validation_error("duality: dim Hom(1, a (x) a*) != 1 for simple " +
                             spec_.simple_names[a]);
    m.at(0, 0) = Scalar::one();
    coev_raw.blk[spec_.unit] = m;
  }
  Morphism ev_raw{SumObject::of(Word{as, a}), SumObject::unit(), {}};
  {
    Mat m(1, block_dim(spec_.unit, ev_raw.src));
    if (m.cols() != 1)
      throw validation_error("duality: dim Hom(a* (x) a, 1) != 1 for simple " +
                             spec_.simple_names[a]);
    m.at(0, 0) = Scalar::one();
    ev_raw.blk[spec_.unit] = m;
  }
  SumObject A = SumObject::simple(a);
  Morphism zig = compose(tensor(id(A), ev_raw), tensor(coev_raw, id(A)));
  auto it = zig.blk.find(a);
  if (it == zig.blk.end() || it->second.at(0, 0).is_zero())
    throw validation_error("duality: zigzag vanishes for simple " + spec_.simple_names[a]);
  ev_norm_[a] = it->second.at(0, 0).inverse();
  return *ev_norm_[a];
}

const Scalar& Calc::tev_norm(int a) {
  if (tev_norm_[a]) return *tev_norm_[a];
  int as = spec_.dual[a];
  Morphism tcoev_raw{SumObject::unit(), SumObject::of(Word{as, a}), {}};
  {
    Mat m(block_dim(spec_.unit, tcoev_raw.dst), 1);
    if (m.rows() != 1)
      throw validation_error("duality: dim Hom(1, a* (x) a) != 1 for simple " +
                             spec_.simple_names[a]);
    m.at(0, 0) = Scalar::one();
    tcoev_raw.blk[spec_.unit] = m;
  }
  Morphism tev_raw{SumObject::of(Word{a, as}), SumObject::unit(), {}};
  {
    Mat m(1, block_dim(spec_.unit, tev_raw.src));
    m.at(0, 0) = Scalar::one();
    tev_raw.blk[spec_.unit] = m;
  }
  SumObject A = SumObject::simple(a);
  Morphism zig = compose(tensor(tev_raw, id(A)), tensor(id(A), tcoev_raw));
  auto it = zig.blk.find(a);
  if (it == zig.blk.end() || it->second.at(0, 0).is_zero())
    throw validation_error("duality: right zigzag vanishes for simple " + spec_.simple_names[a]);
  // tcoev carries the pivotal coefficient; tev compensates to keep the zigzag
  tev_norm_[a] = (it->second.at(0, 0) * spec_.pivotal[a]).inverse();
  return *tev_norm_[a];
}

Morphism Calc::ev_word(const Word& w) {
  if (w.empty()) return id(SumObject::unit());
  int a = w.front();
  Word w0(w.begin() + 1, w.end());
  int as = spec_.dual[a];
  // ev_w : (w0*, a*, a, w0) -> unit
  Morphism ev_a{SumObject::of(Word{as, a}), SumObject::unit(), {}};
  {
    Mat m(1, block_dim(spec_.unit, ev_a.src));
    m.at(0, 0) = ev_norm(a);
    ev_a.blk[spec_.unit] = m;
  }
  Morphism inner = tensor(tensor(id(SumObject::of(dual_word(w0))), ev_a), id(SumObject::of(w0)));
  return compose(ev_word(w0), inner);
}

Morphism Calc::coev_word(const Word& w) {
  if (w.empty()) return id(SumObject::unit());
  int a = w.front();
  Word w0(w.begin() + 1, w.end());
  int as = spec_.dual[a];
  Morphism coev_a{SumObject::unit(), SumObject::of(Word{a, as}), {}};
  {
    Mat m(block_dim(spec_.unit, coev_a.dst), 1);
    m.at(0, 0) = Scalar::one();
    coev_a.blk[spec_.unit] = m;
  }
  Morphism inner = tensor(tensor(id(SumObject::simple(a)), coev_word(w0)),
                          id(SumObject::simple(as)));
  return compose(inner, coev_a);
}

Morphism Calc::tev_word(const Word& w) {
  if (w.empty()) return id(SumObject::unit());
  int a = w.front();
  Word w0(w.begin() + 1, w.end());
  int as = spec_.dual[a];
  Morphism tev_a{SumObject::of(Word{a, as}), SumObject::unit(), {}};
  {
    Mat m(1, block_dim(spec_.unit, tev_a.src));
    m.at(0, 0) = tev_norm(a);
    tev_a.blk[spec_.unit] = m;
  }
  Morphism inner = tensor(tensor(id(SumObject::simple(a)), tev_word(w0)),
                          id(SumObject::simple(as)));
  return compose(tev_a, inner);
}

Morphism Calc::tcoev_word(const Word& w) {
  if (w.empty()) return id(SumObject::unit());
  int a = w.front();
  Word w0(w.begin() + 1, w.end());
  int as = spec_.dual[a];
  Morphism tcoev_a{SumObject::unit(), SumObject::of(Word{as, a}), {}};
  {
    Mat m(block_dim(spec_.unit, tcoev_a.dst), 1);
    m.at(0, 0) = spec_.pivotal[a];
    tcoev_a.blk[spec_.unit] = m;
  }
  Morphism inner = tensor(tensor(id(SumObject::of(dual_word(w0))), tcoev_a), id(SumObject::of(w0)));
  return compose(inner, tcoev_word(w0));
}

Morphism Calc::ev(const SumObject& x) {
  SumObject src = tensor_obj(dual_obj(x), x);
  Morphism out = zero(src, SumObject::unit());
  for (size_t i = 0; i < x.words.size(); ++i) {
    size_t pair_index = i * x.words.size() + i;
    out = add(out, compose(ev_word(x.words[i]), project(src, pair_index)));
  }
  return out;
}

Morphism Calc::coev(const SumObject& x) {
  SumObject dst = tensor_obj(x, dual_obj(x));
  Morphism out = zero(SumObject::unit(), dst);
  for (size_t i = 0; i < x.words.size(); ++i) {
    size_t pair_index = i * x.words.size() + i;
    out = add(out, compose(inject(dst, pair_index), coev_word(x.words[i])));
  }
  return out;
}

Morphism Calc::tev(const SumObject& x) {
  SumObject src = tensor_obj(x, dual_obj(x));
  Morphism out = zero(src, SumObject::unit());
  for (size_t i = 0; i < x.words.size(); ++i) {
    size_t pair_index = i * x.words.size() + i;
    out = add(out, compose(tev_word(x.words[i]), project(src, pair_index)));
  }
  return out;
}

Morphism Calc::tcoev(const SumObject& x) {
  SumObject dst = tensor_obj(dual_obj(x), x);
  Morphism out = zero(SumObject::unit(), dst);
  for (size_t i = 0; i < x.words.size(); ++i) {
    size_t pair_index = i * x.words.size() + i;
    out = add(out, compose(inject(dst, pair_index), tcoev_word(x.words[i])));
  }
  return out;
}

Morphism Calc::dual_morphism(const Morphism& f) {
  const SumObject& X = f.src;
  const SumObject& Y = f.dst;
  SumObject Xs = dual_obj(X), Ys = dual_obj(Y);
  Morphism step1 = tensor(id(Ys), coev(X));                    // Y* -> Y* X X*
  Morphism step2 = tensor(id(Ys), tensor(f, id(Xs)));          // -> Y* Y X*
  Morphism step3 = tensor(ev(Y), id(Xs));                      // -> X*
  return compose(step3, compose(step2, step1));
}

// ---------------- scalars and traces ----------------

Scalar Calc::scalar_of(const Morphism& f) {
  if (block_dim(spec_.unit, f.src) != 1 || block_dim(spec_.unit, f.dst) != 1)
    throw math_error("scalar_of: morphism is not an endomorphism of the unit");
  auto it = f.blk.find(spec_.unit);
  if (it == f.blk.end()) return Scalar::zero(spec_.conductor);
  return it->second.at(0, 0);
}

Scalar Calc::trace_left(const Morphism& f) {
  Morphism comp = compose(ev(f.src), compose(tensor(id(dual_obj(f.src)), f), tcoev(f.src)));
  return scalar_of(comp);
}

Scalar Calc::trace_right(const Morphism& f) {
  Morphism comp = compose(tev(f.src), compose(tensor(f, id(dual_obj(f.src))), coev(f.src)));
  return scalar_of(comp);
}

Scalar Calc::trace_fast(const Morphism& f) {
  Scalar t = Scalar::zero(spec_.conductor);
  for (const auto& [c, m] : f.blk) t += spec_.dim(c) * m.trace();
  return t;
}

Scalar Calc::dim_of(const SumObject& x) {
  Scalar d = Scalar::zero(spec_.conductor);
  for (const auto& w : x.words) {
    Scalar p = Scalar::one();
    for (int a : w) p *= spec_.dim(a);
    d += p;
  }
  return d;
}

size_t Calc::hom_dim(const SumObject& x, const SumObject& y) {
  size_t d = 0;
  for (int c = 0; c < spec_.num_simples(); ++c) d += block_dim(c, x) * block_dim(c, y);
  return d;
}

std::vector<Morphism> Calc::hom_basis(const SumObject& x, const SumObject& y) {
  std::vector<Morphism> basis;
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dx = block_dim(c, x), dy = block_dim(c, y);
    for (size_t j = 0; j < dy; ++j)
      for (size_t i = 0; i < dx; ++i) {
        Morphism f = zero(x, y);
        Mat m(dy, dx);
        m.at(j, i) = Scalar::one();
        f.blk[c] = std::move(m);
        basis.push_back(std::move(f));
      }
  }
  return basis;
}

std::vector<Scalar> Calc::hom_coords(const Morphism& f) {
  std::vector<Scalar> out;
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dx = block_dim(c, f.src), dy = block_dim(c, f.dst);
    auto it = f.blk.find(c);
    for (size_t j = 0; j < dy; ++j)
      for (size_t i = 0; i < dx; ++i)
        out.push_back(it == f.blk.end() ? Scalar::zero(spec_.conductor) : it->second.at(j, i));
  }
  return out;
}

std::optional<int> Calc::degree_of_word(const Word& w) const {
  int d = spec_.group.unit();
  for (int a : w) d = spec_.group.mul(d, spec_.degree[a]);
  return d;
}

std::optional<int> Calc::degree_of(const SumObject& x) const {
  std::optional<int> deg;
  for (const auto& w : x.words) {
    auto d = degree_of_word(w);
    if (!deg)
      deg = d;
    else if (*deg != *d)
      return std::nullopt;
  }
  return deg;
}

bool Calc::invertible(const Morphism& f) {
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dx = block_dim(c, f.src), dy = block_dim(c, f.dst);
    if (dx != dy) return false;
    if (dx == 0) continue;
    auto it = f.blk.find(c);
    if (it == f.blk.end() || !it->second.invertible()) return false;
  }
  return true;
}

Morphism Calc::invert(const Morphism& f) {
  Morphism g{f.dst, f.src, {}};
  for (int c = 0; c < spec_.num_simples(); ++c) {
    size_t dx = block_dim(c, f.src), dy = block_dim(c, f.dst);
    if (dx != dy) throw math_error("invert: block dimensions differ");
    if (dx == 0) continue;
    auto it = f.blk.find(c);
    if (it == f.blk.end()) throw math_error("invert: zero block");
    g.blk[c] = it->second.inverse();
  }
  return g;
}

}  // namespace gcat
