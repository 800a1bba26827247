#include "hamcheck/tensor.hpp"

#include <stdexcept>

namespace hamcheck {

Tensor::Tensor(int dim, std::vector<Slot> slots) : dim_(dim), slots_(std::move(slots))
{
    if (dim < 0) {
        throw std::invalid_argument("negative tensor dimension");
    }
    std::size_t n = 1;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        n *= static_cast<std::size_t>(dim);
    }
    data_.resize(n);
}

Tensor Tensor::identity(int dim, std::vector<Slot> slots)
{
    Tensor t(dim, std::move(slots));
    if (t.rank() != 2) {
        throw std::invalid_argument("identity requires rank 2");
    }
    for (int i = 0; i < dim; ++i) {
        t(i, i) = RationalExpr(1L);
    }
    return t;
}

Tensor Tensor::from_rows(const std::vector<std::vector<RationalExpr>>& rows, std::vector<Slot> slots)
{
    const int n = static_cast<int>(rows.size());
    Tensor t(n, std::move(slots));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("matrix rows must be square");
        }
        for (int j = 0; j < n; ++j) {
            t(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return t;
}

std::size_t Tensor::offset(std::span<const int> idx) const
{
    if (idx.size() != slots_.size()) {
        throw std::out_of_range("tensor rank mismatch");
    }
    std::size_t off = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) {
            throw std::out_of_range("tensor index out of range");
        }
        off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return off;
}

std::vector<int> Tensor::index_of(std::size_t flat) const
{
    std::vector<int> idx(slots_.size());
    for (std::size_t k = slots_.size(); k-- > 0;) {
        idx[k] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
        flat /= static_cast<std::size_t>(dim_);
    }
    return idx;
}

bool Tensor::is_zero() const
{
    for (const auto& e : data_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::vector<int>, RationalExpr>> Tensor::nonzero_entries() const
{
    std::vector<std::pair<std::vector<int>, RationalExpr>> out;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!data_[k].is_zero()) {
            out.emplace_back(index_of(k), data_[k]);
        }
    }
    return out;
}

bool Tensor::is_free_of(const std::function<bool(Symbol)>& pred) const
{
    for (const auto& e : data_) {
        for (Symbol s : e.symbols()) {
            if (pred(s)) {
                return false;
            }
        }
    }
    return true;
}

Tensor Tensor::generate(int dim, std::vector<Slot> slots, const std::function<RationalExpr(std::span<const int>)>& f)
{
    Tensor t(dim, std::move(slots));
    for (std::size_t k = 0; k < t.data_.size(); ++k) {
        auto idx = t.index_of(k);
        t.data_[k] = f(idx);
    }
    return t;
}

Tensor Tensor::map(const std::function<RationalExpr(const RationalExpr&)>& f) const
{
    Tensor t = *this;
    for (auto& e : t.data_) {
        e = f(e);
    }
    return t;
}

namespace {

void require_same_shape(const Tensor& a, const Tensor& b)
{
    if (a.dim() != b.dim() || a.rank() != b.rank()) {
        throw std::invalid_argument("tensor shape mismatch");
    }
}

} // namespace

Tensor operator+(const Tensor& a, const Tensor& b)
{
    require_same_shape(a, b);
    Tensor t = a;
    for (std::size_t k = 0; k < t.data_.size(); ++k) {
        t.data_[k] += b.data_[k];
    }
    return t;
}

Tensor operator-(const Tensor& a, const Tensor& b)
{
    require_same_shape(a, b);
    Tensor t = a;
    for (std::size_t k = 0; k < t.data_.size(); ++k) {
        t.data_[k] -= b.data_[k];
    }
    return t;
}

Tensor operator-(const Tensor& a)
{
    return a.map([](const RationalExpr& e) { return -e; });
}

Tensor Tensor::scaled(const RationalExpr& c) const
{
    return map([&c](const RationalExpr& e) { return e * c; });
}

Tensor matmul(const Tensor& a, const Tensor& b)
{
    if (a.rank() != 2 || b.rank() != 2 || a.dim() != b.dim()) {
        throw std::invalid_argument("matmul requires square matrices of equal size");
    }
    const int n = a.dim();
    Tensor t(n, {a.slots()[0], b.slots()[1]});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RationalExpr s;
            for (int k = 0; k < n; ++k) {
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) {
                    s += a(i, k) * b(k, j);
                }
            }
            t(i, j) = s;
        }
    }
    return t;
}

Tensor transpose(const Tensor& m)
{
    if (m.rank() != 2) {
        throw std::invalid_argument("transpose requires rank 2");
    }
    Tensor t(m.dim(), {m.slots()[1], m.slots()[0]});
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            t(i, j) = m(j, i);
        }
    }
    return t;
}

namespace {

using Rows = std::vector<std::vector<RationalExpr>>;

// Laplace expansion along the row with most zeros; dimensions here are tiny.
RationalExpr laplace(const Rows& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return RationalExpr(1L);
    }
    if (n == 1) {
        return m[0][0];
    }
    if (n == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
    std::size_t row = 0;
    std::size_t best = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t zeros = 0;
        for (const auto& e : m[r]) {
            zeros += e.is_zero() ? 1 : 0;
        }
        if (zeros > best) {
            best = zeros;
            row = r;
        }
    }
    RationalExpr total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[row][c].is_zero()) {
            continue;
        }
        Rows minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) {
                continue;
            }
            std::vector<RationalExpr> line;
            line.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    line.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(line));
        }
        RationalExpr term = m[row][c] * laplace(minor);
        if ((row + c) % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

Rows rows_of(const Tensor& m)
{
    const auto n = static_cast<std::size_t>(m.dim());
    Rows rows(n, std::vector<RationalExpr>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = m(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return rows;
}

Slot flip(Slot s) { return s == Slot::Upper ? Slot::Lower : Slot::Upper; }

} // namespace

RationalExpr det(const Tensor& m)
{
    if (m.rank() != 2) {
        throw std::invalid_argument("det requires a rank-2 tensor");
    }
    return laplace(rows_of(m));
}

std::optional<Tensor> inverse(const Tensor& m)
{
    RationalExpr d = det(m);
    if (d.is_zero()) {
        return std::nullopt;
    }
    const int n = m.dim();
    Rows rows = rows_of(m);
    Tensor inv(n, {flip(m.slots()[1]), flip(m.slots()[0])});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rows minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) {
                    continue;
                }
                std::vector<RationalExpr> line;
                for (int c = 0; c < n; ++c) {
                    if (c != j) {
                        line.push_back(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    }
                }
                minor.push_back(std::move(line));
            }
            RationalExpr cof = laplace(minor);
            if ((i + j) % 2 == 1) {
                cof = -cof;
            }
            inv(j, i) = cof / d;
        }
    }
    return inv;
}

} // namespace hamcheck
