#include "bvtorus/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bvtorus {

VectorField::VectorField(PolyVector value) : value_(std::move(value)) {
  const auto d = value_.degree();
  if (!value_.is_zero() && d != 1) throw std::invalid_argument("vector field must have cohomological degree 1");
}

VectorField VectorField::xi(const MultiIndex& n, int i) { return VectorField(PolyVector::xi(n, i)); }

VectorField VectorField::xi(std::int64_t n) { return xi(MultiIndex{n}, 1); }

VectorField witt_bracket(const VectorField& x, const VectorField& y) {
  return VectorField(gerstenhaber_bracket(x.value(), y.value()));
}

Sl2Triple::Sl2Triple(VectorField e, VectorField h, VectorField f) : e_(std::move(e)), h_(std::move(h)), f_(std::move(f)) {
  if (witt_bracket(h_, e_) != e_.scaled(2)) throw std::invalid_argument("sl2 triple: [h,e] != 2e");
  if (witt_bracket(h_, f_) != f_.scaled(-2)) throw std::invalid_argument("sl2 triple: [h,f] != -2f");
  if (witt_bracket(e_, f_) != h_) throw std::invalid_argument("sl2 triple: [e,f] != h");
}

Sl2Triple standard_sl2(std::size_t rank) {
  if (rank != 1) throw std::invalid_argument("standard sl2 triple is defined for rank 1");
  return Sl2Triple(VectorField::xi(1), VectorField::xi(0).scaled(2), VectorField::xi(-1).scaled(-1));
}

GlMatrix::GlMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw std::invalid_argument("gl matrix must be square");
}

GlMatrix GlMatrix::elementary(std::size_t size, std::size_t i, std::size_t j) {
  RationalMatrix m(size, size);
  m(i, j) = 1;
  return GlMatrix(std::move(m));
}

GlMatrix matrix_commutator(const GlMatrix& a, const GlMatrix& b) {
  return GlMatrix(commutator(a.matrix(), b.matrix()));
}

namespace {

// Image of Z_i D_j under restriction to the torus chart.
PolyVector restrict_elementary(std::size_t rank, std::size_t i, std::size_t j) {
  PolyVector out(rank);
  const int jj = static_cast<int>(j);
  if (i != 0 && j != 0) {
    // z_i d_j = z_i z_j^{-1} theta_j
    return PolyVector::xi(MultiIndex::unit(rank, i) - MultiIndex::unit(rank, j), jj);
  }
  if (i == 0 && j != 0) {
    return PolyVector::xi(-MultiIndex::unit(rank, j), jj);
  }
  // -z_i sum_k z_k d_k, or -sum_k z_k d_k when i = 0
  const MultiIndex shift = i == 0 ? MultiIndex(rank) : MultiIndex::unit(rank, i);
  for (std::size_t k = 1; k <= rank; ++k) out = out - PolyVector::xi(shift, static_cast<int>(k));
  return out;
}

}  // namespace

VectorField restrict_from_projective(const GlMatrix& e, std::size_t rank) {
  if (e.size() != rank + 1) throw std::invalid_argument("matrix size must be rank + 1");
  PolyVector out(rank);
  for (std::size_t i = 0; i <= rank; ++i) {
    for (std::size_t j = 0; j <= rank; ++j) {
      if (!e(i, j).is_zero()) out = out + restrict_elementary(rank, i, j).scaled(e(i, j));
    }
  }
  return VectorField(std::move(out));
}

std::size_t span_dimension(const std::vector<PolyVector>& family) {
  std::map<PolyTermKey, std::size_t> column;
  for (const auto& p : family) {
    for (const auto& [key, c] : p.terms()) column.try_emplace(key, column.size());
  }
  RationalMatrix m(family.size(), column.size());
  for (std::size_t row = 0; row < family.size(); ++row) {
    for (const auto& [key, c] : family[row].terms()) m(row, column.at(key)) = c;
  }
  return m.rank();
}

namespace {

void require_small_rank(std::size_t rank) {
  if (rank < 1 || rank > 3) throw std::invalid_argument("rank must be in 1..3");
}

}  // namespace

EmbeddingReport verify_lie_embedding(std::size_t rank) {
  require_small_rank(rank);
  const std::size_t n = rank + 1;
  EmbeddingReport report;
  report.rank = rank;

  std::vector<GlMatrix> basis;
  std::vector<VectorField> images;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(GlMatrix::elementary(n, i, j));
      images.push_back(restrict_from_projective(basis.back(), rank));
      labels.emplace_back(i, j);
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      ++report.pairs_checked;
      const VectorField lhs = restrict_from_projective(matrix_commutator(basis[a], basis[b]), rank);
      const VectorField rhs = witt_bracket(images[a], images[b]);
      if (lhs == rhs) {
        ++report.pairs_ok;
      } else {
        report.failures.push_back({labels[a].first, labels[a].second, labels[b].first, labels[b].second});
      }
    }
  }

  std::vector<PolyVector> values;
  for (const auto& v : images) values.push_back(v.value());
  report.image_dim = span_dimension(values);
  report.identity_maps_to_zero = restrict_from_projective(GlMatrix::identity(n), rank).is_zero();
  // Kernel has dimension n^2 - image_dim; with the identity in it, it is exactly the scalars.
  report.kernel_is_scalars = report.identity_maps_to_zero && report.image_dim + 1 == n * n;
  return report;
}

RootVector RootVector::from_h1(const MultiIndex& n) {
  RootVector v;
  v.h1_ = n;
  v.ambient_.assign(n.rank() + 1, 0);
  v.ambient_[0] = -n.sum();
  for (std::size_t k = 0; k < n.rank(); ++k) v.ambient_[k + 1] = n[k];
  return v;
}

RootVector RootVector::from_ambient(std::vector<std::int64_t> coords) {
  if (coords.empty()) throw std::invalid_argument("root vector needs at least one coordinate");
  std::int64_t s = 0;
  for (auto c : coords) s += c;
  if (s != 0) throw std::invalid_argument("root vector coordinates must sum to zero");
  return from_h1(MultiIndex(std::vector<std::int64_t>(coords.begin() + 1, coords.end())));
}

RootVector RootVector::difference(std::size_t rank, std::size_t a, std::size_t b) {
  std::vector<std::int64_t> c(rank + 1, 0);
  c.at(a) += 1;
  c.at(b) -= 1;
  return from_ambient(std::move(c));
}

std::optional<RootVector> root_grading(const VectorField& x) {
  if (x.is_zero()) return std::nullopt;
  const auto g = x.value().gradings();
  if (g.size() != 1) throw std::invalid_argument("vector field is not homogeneous for the H_1 grading");
  return RootVector::from_h1(g.front());
}

std::vector<VectorField> cartan_subalgebra(std::size_t rank) {
  std::vector<VectorField> out;
  for (std::size_t i = 1; i <= rank; ++i) out.emplace_back(PolyVector::theta(rank, static_cast<int>(i)));
  return out;
}

RootSystemReport root_system(std::size_t rank) {
  require_small_rank(rank);
  const std::size_t n = rank + 1;
  RootSystemReport report;
  report.rank = rank;
  report.homomorphism_ok = verify_lie_embedding(rank).ok();

  std::vector<PolyVector> zero_graded;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        // Traceless diagonal part of sl_{r+1}: E_ii - E_00 for i >= 1.
        if (i == 0) continue;
        const auto h = GlMatrix::elementary(n, i, i) - GlMatrix::elementary(n, 0, 0);
        const VectorField field = restrict_from_projective(h, rank);
        const auto g = root_grading(field);
        if (g && g->is_zero()) zero_graded.push_back(field.value());
        continue;
      }
      const VectorField field = restrict_from_projective(GlMatrix::elementary(n, i, j), rank);
      const auto g = root_grading(field);
      if (!g) continue;
      if (g->is_zero()) {
        zero_graded.push_back(field.value());
      } else {
        report.roots.push_back({*g, i, j, field});
      }
    }
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.root > b.root; });
  report.cartan_dim = span_dimension(zero_graded);

  std::set<std::vector<std::int64_t>> expected, found;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) expected.insert(RootVector::difference(rank, a, b).ambient());
    }
  }
  for (const auto& r : report.roots) found.insert(r.root.ambient());
  report.matches_a_r = found == expected && report.roots.size() == rank * (rank + 1) && report.cartan_dim == rank;
  return report;
}

}  // namespace bvtorus
