#pragma once
#include <map>
#include <set>
#include <vector>
#include <stdexcept>
#include "sbl/matrix.hpp"
#include "sbl/grading.hpp"

namespace sbl {

// Finite chain complex with cohomological differentials d_k : C^k -> C^{k+1}.
// Dimensions are declared per degree; absent degrees are zero.
template <class K>
class ChainComplex {
public:
    void set_dim(int degree, std::size_t dim) {
        if (dim == 0) return;
        dims_[degree] = dim;
    }

    std::size_t dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    // d maps degree -> degree+1; shape (dim(degree+1)) x (dim(degree)):
    // columns indexed by basis of C^degree.
    void set_boundary(int degree, Matrix<K> d) {
        if (d.rows() != dim(degree + 1) || d.cols() != dim(degree))
            throw std::invalid_argument("ChainComplex: boundary shape mismatch");
        boundaries_[degree] = std::move(d);
    }

    Matrix<K> boundary(int degree) const {
        auto it = boundaries_.find(degree);
        if (it != boundaries_.end()) return it->second;
        return Matrix<K>(dim(degree + 1), dim(degree));
    }

    void validate() const {
        for (auto& [deg, dimv] : dims_) {
            Matrix<K> d0 = boundary(deg);
            Matrix<K> d1 = boundary(deg + 1);
            if (d1.rows() > 0 && d0.cols() > 0 && !(d1 * d0).is_zero_matrix())
                throw std::invalid_argument("ChainComplex: d^2 != 0 at degree " +
                                            std::to_string(deg));
        }
    }

    GradedDims homology() const {
        validate();
        GradedDims out;
        for (auto& [deg, dimv] : dims_) {
            std::size_t rk_out = rank(boundary(deg));
            std::size_t rk_in = rank(boundary(deg - 1));
            out.add(deg, static_cast<std::int64_t>(dimv) - rk_out - rk_in);
        }
        return out;
    }

    // Quotient by the subcomplex spanned by the selected basis elements.
    // `selection[degree]` lists basis indices of C^degree belonging to A.
    // A must be boundary-closed: d(A) is contained in A's span.
    ChainComplex quotient(const std::map<int, std::set<std::size_t>>& selection) const {
        // Check boundary-closedness: every selected column of d must be
        // supported on selected rows.
        for (auto& [deg, sel] : selection) {
            Matrix<K> d = boundary(deg);
            auto rowsel = selection.find(deg + 1);
            for (std::size_t c : sel) {
                if (c >= dim(deg))
                    throw std::invalid_argument("ChainComplex: selection out of range");
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    if (is_zero(d(r, c))) continue;
                    if (rowsel == selection.end() || !rowsel->second.count(r))
                        throw std::invalid_argument(
                            "ChainComplex: selection is not boundary-closed");
                }
            }
        }
        ChainComplex q;
        std::map<int, std::vector<std::size_t>> keep; // old index list per degree
        for (auto& [deg, dimv] : dims_) {
            auto sel = selection.find(deg);
            std::vector<std::size_t> k;
            for (std::size_t i = 0; i < dimv; ++i)
                if (sel == selection.end() || !sel->second.count(i)) k.push_back(i);
            if (!k.empty()) q.set_dim(deg, k.size());
            keep[deg] = std::move(k);
        }
        for (auto& [deg, d] : boundaries_) {
            auto& kc = keep[deg];
            auto& kr = keep[deg + 1];
            if (kc.empty() || kr.empty()) continue;
            Matrix<K> dd(kr.size(), kc.size());
            for (std::size_t r = 0; r < kr.size(); ++r)
                for (std::size_t c = 0; c < kc.size(); ++c)
                    dd(r, c) = d(kr[r], kc[c]);
            q.set_boundary(deg, std::move(dd));
        }
        return q;
    }

    GradedDims relative_homology(const std::map<int, std::set<std::size_t>>& sel) const {
        return quotient(sel).homology();
    }

    const std::map<int, std::size_t>& dims() const { return dims_; }

private:
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix<K>> boundaries_;
};

} // namespace sbl
