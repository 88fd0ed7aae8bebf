#ifndef FIBERCX_COMPLEX_HPP
#define FIBERCX_COMPLEX_HPP

// Finite cochain complexes over GF(2) with named bases, cohomology with
// explicit representatives, and cochain maps. Degrees outside the stored
// range are zero spaces; the coboundary out of the top degree is zero.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "gf2.hpp"

namespace fibercx {

struct CohomologySummary {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<Cochain> generators;  // canonical cocycle representatives
};

class CochainComplexZ2 {
public:
    // bases[k] is the ordered basis of degree k; deltas[k] maps degree k
    // to degree k+1 (rows = basis of k+1, cols = basis of k). The delta
    // out of the top degree is implicitly zero.
    CochainComplexZ2(std::vector<std::vector<ClassName>> bases,
                     std::vector<BitMatrix> deltas)
        : bases_(std::move(bases)), deltas_(std::move(deltas)) {
        for (std::size_t k = 0; k < bases_.size(); ++k)
            for (std::size_t i = 0; i < bases_[k].size(); ++i)
                index_[{static_cast<int>(k), bases_[k][i]}] = i;
    }

    std::size_t num_degrees() const { return bases_.size(); }

    std::size_t dim(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= bases_.size()) return 0;
        return bases_[static_cast<std::size_t>(k)].size();
    }

    const std::vector<ClassName>& basis(int k) const {
        static const std::vector<ClassName> empty;
        if (k < 0 || static_cast<std::size_t>(k) >= bases_.size()) return empty;
        return bases_[static_cast<std::size_t>(k)];
    }

    // delta_k as a matrix; zero-shaped outside the stored range.
    BitMatrix delta(int k) const {
        if (k >= 0 && static_cast<std::size_t>(k) < deltas_.size())
            return deltas_[static_cast<std::size_t>(k)];
        return BitMatrix(dim(k + 1), dim(k));
    }

    std::size_t basis_index(int k, const ClassName& n) const {
        auto it = index_.find({k, n});
        if (it == index_.end())
            throw std::invalid_argument("class " + print_class_name(n) +
                                        " not in degree-" + std::to_string(k) +
                                        " basis");
        return it->second;
    }

    BitVector to_vector(const Cochain& c) const {
        BitVector v(dim(c.degree));
        for (const auto& n : c.support) v.set(basis_index(c.degree, n), true);
        return v;
    }

    Cochain from_vector(int k, const BitVector& v) const {
        Cochain c;
        c.degree = k;
        const auto& b = basis(k);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (v.get(i)) c.support.insert(b[i]);
        return c;
    }

    // True iff all matrix shapes are consistent and every composite
    // delta_{k+1} . delta_k vanishes.
    bool check(std::string* why = nullptr) const {
        for (std::size_t k = 0; k < deltas_.size(); ++k) {
            if (deltas_[k].cols() != dim(static_cast<int>(k)) ||
                deltas_[k].rows() != dim(static_cast<int>(k) + 1)) {
                if (why)
                    *why = "delta shape mismatch at degree " + std::to_string(k);
                return false;
            }
        }
        for (std::size_t k = 0; k + 1 < deltas_.size(); ++k) {
            for (std::size_t c = 0; c < deltas_[k].cols(); ++c) {
                BitVector col(deltas_[k].rows());
                for (std::size_t r = 0; r < deltas_[k].rows(); ++r)
                    if (deltas_[k].get(r, c)) col.set(r, true);
                if (!deltas_[k + 1].apply(col).is_zero()) {
                    if (why)
                        *why = "delta.delta != 0 on generator " +
                               print_class_name(bases_[k][c]) + " at degree " +
                               std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    }

    Cochain apply_delta(const Cochain& c) const {
        return from_vector(c.degree + 1, delta(c.degree).apply(to_vector(c)));
    }

    bool is_cocycle(const Cochain& c) const {
        return delta(c.degree).apply(to_vector(c)).is_zero();
    }

    std::size_t betti(int k) const {
        std::size_t ker = dim(k) - rank(delta(k));
        return ker - rank(delta(k - 1));
    }

    // Canonical representatives: kernel vectors reduced modulo the image,
    // then row-reduced, so output is bit-stable for a fixed basis order.
    CohomologySummary cohomology_basis(int k) const {
        CohomologySummary out;
        out.degree = k;

        std::vector<BitVector> image;
        {
            BitMatrix dprev = delta(k - 1);
            BitMatrix rows(dprev.cols(), dprev.rows());
            for (std::size_t c = 0; c < dprev.cols(); ++c)
                for (std::size_t r = 0; r < dprev.rows(); ++r)
                    if (dprev.get(r, c)) rows.row(c).set(r, true);
            Rref e = rref(rows);
            for (std::size_t i = 0; i < e.pivots.size(); ++i)
                image.push_back(e.mat.row(i));
        }

        std::vector<BitVector> reduced;
        for (const auto& v : kernel_basis(delta(k))) {
            BitVector w = v;
            for (const auto& im : image) {
                std::size_t p = im.first_set();
                if (p != BitVector::npos && w.get(p)) w ^= im;
            }
            if (!w.is_zero()) reduced.push_back(w);
        }
        if (!reduced.empty()) {
            BitMatrix m(reduced.size(), dim(k));
            for (std::size_t i = 0; i < reduced.size(); ++i) m.row(i) = reduced[i];
            Rref e = rref(m);
            for (std::size_t i = 0; i < e.pivots.size(); ++i)
                out.generators.push_back(from_vector(k, e.mat.row(i)));
        }
        out.dimension = out.generators.size();
        return out;
    }

    // True iff c1 and c2 differ by a coboundary. Both must be cocycles of
    // the same degree.
    bool cohomologous(const Cochain& c1, const Cochain& c2) const {
        if (c1.degree != c2.degree)
            throw std::invalid_argument("cohomologous: degree mismatch");
        if (!is_cocycle(c1) || !is_cocycle(c2))
            throw std::invalid_argument("cohomologous: input is not a cocycle");
        BitVector diff = to_vector(c1) ^ to_vector(c2);
        return solve(delta(c1.degree - 1), diff).has_value();
    }

private:
    std::vector<std::vector<ClassName>> bases_;
    std::vector<BitMatrix> deltas_;
    std::map<std::pair<int, ClassName>, std::size_t> index_;
};

// A degree-wise linear map between complexes, checked at construction to
// commute with both coboundaries.
class CochainMap {
public:
    CochainMap(const CochainComplexZ2* src, const CochainComplexZ2* dst,
               std::vector<BitMatrix> maps)
        : src_(src), dst_(dst), maps_(std::move(maps)) {
        for (std::size_t k = 0; k < maps_.size(); ++k) {
            const BitMatrix& fk = maps_[k];
            if (fk.cols() != src_->dim(static_cast<int>(k)) ||
                fk.rows() != dst_->dim(static_cast<int>(k)))
                throw std::invalid_argument("cochain map: shape mismatch at degree " +
                                            std::to_string(k));
        }
        for (std::size_t k = 0; k < maps_.size(); ++k) {
            BitMatrix fk = map(static_cast<int>(k));
            BitMatrix fk1 = map(static_cast<int>(k) + 1);
            BitMatrix ds = src_->delta(static_cast<int>(k));
            BitMatrix dd = dst_->delta(static_cast<int>(k));
            for (std::size_t c = 0; c < fk.cols(); ++c) {
                BitVector e(fk.cols());
                e.set(c, true);
                if (!(fk1.apply(ds.apply(e)) == dd.apply(fk.apply(e))))
                    throw std::invalid_argument(
                        "cochain map does not commute with delta at degree " +
                        std::to_string(k));
            }
        }
    }

    const CochainComplexZ2& source() const { return *src_; }
    const CochainComplexZ2& target() const { return *dst_; }

    BitMatrix map(int k) const {
        if (k >= 0 && static_cast<std::size_t>(k) < maps_.size())
            return maps_[static_cast<std::size_t>(k)];
        return BitMatrix(dst_->dim(k), src_->dim(k));
    }

    Cochain apply(const Cochain& c) const {
        return dst_->from_vector(c.degree, map(c.degree).apply(src_->to_vector(c)));
    }

private:
    const CochainComplexZ2* src_;
    const CochainComplexZ2* dst_;
    std::vector<BitMatrix> maps_;
};

}  // namespace fibercx

#endif
