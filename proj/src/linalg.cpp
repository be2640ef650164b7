#include "lycas/linalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lycas {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    if (r.get_den() == 1) {
        os << r.get_num();
    } else {
        os << r.get_num() << '/' << r.get_den();
    }
    return os.str();
}

namespace {

bool canonical_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return true;
}

[[noreturn]] void bad_rat(const std::string& text, const std::string& why) {
    throw std::invalid_argument("invalid rational literal \"" + text + "\": " + why);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s = s.substr(1);
    }
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    if (!canonical_digits(num)) bad_rat(text, "numerator must be digits without leading zeros");
    if (neg && num == "0") bad_rat(text, "zero must be written \"0\"");
    if (slash == std::string::npos) {
        Rat r(num, 10);
        if (neg) r = -r;
        return r;
    }
    std::string den = s.substr(slash + 1);
    if (den.find('/') != std::string::npos) bad_rat(text, "more than one \"/\"");
    if (!canonical_digits(den)) bad_rat(text, "denominator must be digits without leading zeros");
    if (den == "0") bad_rat(text, "zero denominator");
    if (den == "1") bad_rat(text, "integers are written without \"/1\"");
    mpz_class n(num, 10), d(den, 10);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) bad_rat(text, "not in lowest terms");
    Rat r(Rat(n) / Rat(d));
    if (neg) r = -r;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit_vec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v[static_cast<size_t>(i)] = 1;
    return v;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("from_rows: ragged rows");
        m.set_row(r, rows[r]);
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Mat::set_col(int c, const Vec& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col: size mismatch");
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rat Mat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: not square");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Vec Mat::flatten() const { return e_; }

Mat Mat::unflatten(const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols)
        throw std::invalid_argument("unflatten: size mismatch");
    Mat m(rows, cols);
    m.e_ = v;
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << rat_str((*this)(r, c));
        }
    }
    os << ']';
    return os.str();
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix add: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sub: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Mat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j) == 0) continue;
                r(i, j) += a(i, k) * b(k, j);
            }
        }
    return r;
}

Mat operator*(const Rat& c, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

Vec mul(const Mat& a, const Vec& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(static_cast<size_t>(a.rows()));
    for (int j = 0; j < a.cols(); ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < a.rows(); ++i) {
            if (a(i, j) == 0) continue;
            r[i] += a(i, j) * x[j];
        }
    }
    return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

Mat take_cols(const Mat& a, const std::vector<int>& idx) {
    Mat r(a.rows(), static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, idx[j]);
    return r;
}

Echelon rref(const Mat& a) {
    Mat m = a;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Mat out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return Echelon{out, pivots, r};
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    auto m = solve_all(a, Mat::unflatten(b, static_cast<int>(b.size()), 1));
    if (!m) return std::nullopt;
    return m->col(0);
}

std::optional<Mat> solve_all(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    Echelon e = rref(hstack(a, b));
    // Any pivot landing in the right block means an inconsistent column.
    for (int p : e.pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            x(e.pivots[i], j) = e.mat(static_cast<int>(i), a.cols() + j);
    return x;
}

std::optional<Mat> invert(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: not square");
    Echelon e = rref(hstack(a, Mat::identity(a.rows())));
    if (e.rank < a.rows() || (e.rank > 0 && e.pivots.back() >= a.cols())) return std::nullopt;
    Mat inv(a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) inv(i, j) = e.mat(i, a.cols() + j);
    return inv;
}

Subspace Subspace::span(const Mat& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows).mat;
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return static_cast<bool>(coords(v));
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    for (int i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("coords: ambient mismatch");
    // Reduce v against the RREF rows; the eliminations are the coordinates.
    Vec w = v;
    Vec cs(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (basis_(i, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        cs[i] = w[lead];
        if (cs[i] != 0)
            for (int c = 0; c < ambient_; ++c) w[c] -= cs[i] * basis_(i, c);
    }
    if (!lycas::is_zero(w)) return std::nullopt;
    return cs;
}

Subspace kernel(const Mat& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(a.cols());
        v[c] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.mat(static_cast<int>(i), c);
        rows.push_back(v);
    }
    if (rows.empty()) return Subspace(a.cols());
    return Subspace::span(Mat::from_rows(rows));
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    return Subspace::span(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace(u.ambient());
    // Solutions (a, b) of U^T a - V^T b = 0 give the common vectors U^T a.
    Mat sys = hstack(u.basis().transpose(), Rat(-1) * v.basis().transpose());
    Subspace k = kernel(sys);
    if (k.dim() == 0) return Subspace(u.ambient());
    std::vector<Vec> rows;
    for (int i = 0; i < k.dim(); ++i) {
        Vec ab = k.basis_row(i);
        Vec a(ab.begin(), ab.begin() + u.dim());
        rows.push_back(mul(u.basis().transpose(), a));
    }
    return Subspace::span(Mat::from_rows(rows));
}

Subspace stabilized_kernel(const Mat& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("stabilized_kernel: not square");
    Mat p = f;
    Subspace k = kernel(p);
    for (int i = 1; i < f.rows(); ++i) {
        p = p * f;
        Subspace next = kernel(p);
        if (next.dim() == k.dim()) break;
        k = next;
    }
    return k;
}

}  // namespace lycas
