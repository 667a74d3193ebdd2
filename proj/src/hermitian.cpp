#include "witnessgate/hermitian.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace witnessgate {

NotHermitian::NotHermitian(int r, int c)
    : std::invalid_argument("matrix is not Hermitian at entry (" + std::to_string(r) + ", " +
                            std::to_string(c) + ")"),
      row(r),
      col(c) {}

BipartiteHermitian::BipartiteHermitian(int dA, int dB, GaussMatrix entries)
    : dA_(dA), dB_(dB), m_(std::move(entries)) {
    if (dA < 1 || dB < 1) throw MalformedMatrix("tensor dimensions must be positive");
    const auto n = static_cast<std::size_t>(dA * dB);
    if (m_.size() != n) throw MalformedMatrix("expected " + std::to_string(n) + " rows");
    for (const auto& row : m_)
        if (row.size() != n) throw MalformedMatrix("expected " + std::to_string(n) + " columns");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c)
            if (!(m_[r][c] == m_[c][r].conj())) throw NotHermitian(static_cast<int>(r), static_cast<int>(c));
}

BipartiteHermitian BipartiteHermitian::identity(int dA, int dB) {
    const auto n = static_cast<std::size_t>(dA * dB);
    GaussMatrix m(n, GaussVector(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussRational(1);
    return {dA, dB, std::move(m)};
}

BipartiteHermitian BipartiteHermitian::scaled(const Rational& s) const {
    GaussMatrix m = m_;
    for (auto& row : m)
        for (auto& z : row) z *= GaussRational(s);
    return {dA_, dB_, std::move(m)};
}

BipartiteHermitian BipartiteHermitian::swapped() const {
    const auto n = static_cast<std::size_t>(dim());
    GaussMatrix m(n, GaussVector(n));
    for (int i = 1; i <= dA_; ++i)
        for (int j = 1; j <= dB_; ++j)
            for (int ip = 1; ip <= dA_; ++ip)
                for (int jp = 1; jp <= dB_; ++jp)
                    m[static_cast<std::size_t>((j - 1) * dA_ + i - 1)][static_cast<std::size_t>((jp - 1) * dA_ + ip - 1)] =
                        x(i, j, ip, jp);
    return {dB_, dA_, std::move(m)};
}

BipartiteHermitian parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedMatrix(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dA") || !doc.contains("dB") || !doc.contains("entries"))
        throw MalformedMatrix("matrix JSON needs dA, dB and entries");
    if (!doc["dA"].is_number_integer() || !doc["dB"].is_number_integer())
        throw MalformedMatrix("dA and dB must be integers");
    const int dA = doc["dA"].get<int>();
    const int dB = doc["dB"].get<int>();
    const auto& rows = doc["entries"];
    if (!rows.is_array()) throw MalformedMatrix("entries must be an array of rows");
    GaussMatrix m;
    for (const auto& row : rows) {
        if (!row.is_array()) throw MalformedMatrix("each row must be an array");
        GaussVector out;
        for (const auto& cell : row) {
            try {
                if (cell.is_string())
                    out.push_back(parse_gauss(cell.get<std::string>()));
                else if (cell.is_number_integer())
                    out.emplace_back(Rational(cell.get<long>()));
                else
                    throw MalformedMatrix("entries must be scalar strings");
            } catch (const std::invalid_argument& e) {
                throw MalformedMatrix(e.what());
            }
        }
        m.push_back(std::move(out));
    }
    return {dA, dB, std::move(m)};
}

BipartiteHermitian load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedMatrix("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const BipartiteHermitian& X) {
    nlohmann::json doc;
    doc["dA"] = X.dA();
    doc["dB"] = X.dB();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : X.entries()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& z : row) r.push_back(format_gauss(z));
        rows.push_back(std::move(r));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

Rational product_expectation(const BipartiteHermitian& X, const GaussVector& v, const GaussVector& w) {
    if (static_cast<int>(v.size()) != X.dA() || static_cast<int>(w.size()) != X.dB())
        throw std::invalid_argument("product vector does not match the tensor shape");
    return hermitian_form(contract_b(X, w), v);
}

GaussMatrix contract_b(const BipartiteHermitian& X, const GaussVector& w) {
    const int dA = X.dA(), dB = X.dB();
    if (static_cast<int>(w.size()) != dB) throw std::invalid_argument("w does not match dB");
    GaussMatrix out(static_cast<std::size_t>(dA), GaussVector(static_cast<std::size_t>(dA)));
    for (int i = 1; i <= dA; ++i)
        for (int ip = 1; ip <= dA; ++ip) {
            GaussRational acc;
            for (int j = 1; j <= dB; ++j) {
                const GaussRational& wj = w[static_cast<std::size_t>(j - 1)];
                if (wj.is_zero()) continue;
                for (int jp = 1; jp <= dB; ++jp) {
                    const GaussRational& wjp = w[static_cast<std::size_t>(jp - 1)];
                    if (wjp.is_zero()) continue;
                    acc += wj.conj() * X.x(i, j, ip, jp) * wjp;
                }
            }
            out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(ip - 1)] = acc;
        }
    return out;
}

GaussMatrix contract_a(const BipartiteHermitian& X, const GaussVector& v) {
    const int dA = X.dA(), dB = X.dB();
    if (static_cast<int>(v.size()) != dA) throw std::invalid_argument("v does not match dA");
    GaussMatrix out(static_cast<std::size_t>(dB), GaussVector(static_cast<std::size_t>(dB)));
    for (int j = 1; j <= dB; ++j)
        for (int jp = 1; jp <= dB; ++jp) {
            GaussRational acc;
            for (int i = 1; i <= dA; ++i) {
                const GaussRational& vi = v[static_cast<std::size_t>(i - 1)];
                if (vi.is_zero()) continue;
                for (int ip = 1; ip <= dA; ++ip) {
                    const GaussRational& vip = v[static_cast<std::size_t>(ip - 1)];
                    if (vip.is_zero()) continue;
                    acc += vi.conj() * X.x(i, j, ip, jp) * vip;
                }
            }
            out[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(jp - 1)] = acc;
        }
    return out;
}

Rational hermitian_form(const GaussMatrix& M, const GaussVector& v) {
    GaussRational acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        GaussRational row;
        for (std::size_t k = 0; k < v.size(); ++k) row += M[i][k] * v[k];
        acc += v[i].conj() * row;
    }
    if (!acc.is_real()) throw std::logic_error("Hermitian form with nonzero imaginary part");
    return acc.re;
}

QPoly characteristic_polynomial(const GaussMatrix& A) {
    const std::size_t n = A.size();
    std::vector<GaussRational> c(n + 1);
    c[n] = GaussRational(1);
    GaussMatrix M(n, GaussVector(n));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        GaussMatrix next(n, GaussVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                GaussRational acc;
                for (std::size_t l = 0; l < n; ++l)
                    if (!M[l][j].is_zero()) acc += A[i][l] * M[l][j];
                next[i][j] = acc;
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        M = std::move(next);
        GaussRational tr;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / GaussRational(Rational(static_cast<long>(k)));
    }
    std::vector<Rational> real(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (!c[k].is_real()) throw std::logic_error("characteristic polynomial is not real");
        real[k] = c[k].re;
    }
    return QPoly(std::move(real));
}

EigenSignature eigen_signature(const GaussMatrix& M) {
    const QPoly p = characteristic_polynomial(M);
    EigenSignature sig;
    while (sig.n_zero <= p.degree() && is_zero(p.coeff(sig.n_zero))) ++sig.n_zero;
    sig.n_neg = count_roots_with_multiplicity<Rational>(p, std::nullopt, Rational(0));
    sig.n_pos = p.degree() - sig.n_zero - sig.n_neg;
    return sig;
}

EigenSignature eigen_signature(const BipartiteHermitian& X) { return eigen_signature(X.entries()); }

}  // namespace witnessgate
