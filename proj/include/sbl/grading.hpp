#pragma once
#include <map>
#include <string>
#include <sstream>
#include <cstdint>

namespace sbl {

// Finitely supported map degree -> rank.  The universal output of every
// homology computation in the artifact.  Zero entries are never stored.
class GradedDims {
public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, std::int64_t>> init) {
        for (auto& [d, r] : init) add(d, r);
    }

    void add(int degree, std::int64_t rank) {
        if (rank == 0) return;
        auto it = dims_.find(degree);
        if (it == dims_.end()) {
            dims_.emplace(degree, rank);
        } else {
            it->second += rank;
            if (it->second == 0) dims_.erase(it);
        }
    }

    std::int64_t at(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    bool empty() const { return dims_.empty(); }
    const std::map<int, std::int64_t>& entries() const { return dims_; }

    GradedDims shifted(int n) const {
        GradedDims out;
        for (auto& [d, r] : dims_) out.add(d + n, r);
        return out;
    }

    GradedDims& operator+=(const GradedDims& o) {
        for (auto& [d, r] : o.dims_) add(d, r);
        return *this;
    }
    friend GradedDims operator+(GradedDims a, const GradedDims& b) { return a += b; }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto& [d, r] : dims_) t += r;
        return t;
    }

    std::int64_t euler() const {
        std::int64_t e = 0;
        for (auto& [d, r] : dims_) e += (d % 2 == 0) ? r : -r;
        return e;
    }

    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (auto& [d, r] : dims_) {
            if (!first) os << ", ";
            first = false;
            os << d << ':' << r;
        }
        os << '}';
        return os.str();
    }

private:
    std::map<int, std::int64_t> dims_;
};

} // namespace sbl
