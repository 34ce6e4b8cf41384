#include "eccalu/codec.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace eccalu {

namespace {

// Minimal h with 2^h >= k + h + 1 (SEC condition).
int sec_parity_bits(int k) {
    int h = 1;
    while ((1u << h) < static_cast<unsigned>(k + h + 1)) ++h;
    return h;
}

// First k nonzero h-bit values of weight >= 2, ascending. These are the
// parity-check columns of the data positions; unit vectors are reserved for
// the parity positions themselves.
std::vector<std::uint32_t> data_columns(int h, int k) {
    std::vector<std::uint32_t> cols;
    for (std::uint32_t v = 3; v < (1u << h) && static_cast<int>(cols.size()) < k; ++v) {
        if (std::popcount(v) >= 2) cols.push_back(v);
    }
    if (static_cast<int>(cols.size()) < k) {
        throw TooLarge("k too large for " + std::to_string(h) + " parity bits");
    }
    return cols;
}

std::uint64_t parity_of(std::uint64_t masked) { return std::popcount(masked) & 1u; }

// BCH/RS take alpha = x as the primitive element; the reduction polynomial
// must make x generate the whole multiplicative group.
void require_primitive_x(const Field& field) {
    GfElement v = 2;
    for (std::uint32_t i = 1; i < field.order(); ++i) {
        if (v == 1) throw UnsupportedCode("x is not primitive for this reduction polynomial");
        v = field.mul(v, 2);
    }
    if (v != 1) throw UnsupportedCode("x is not primitive for this reduction polynomial");
}

struct BmResult {
    std::vector<GfElement> sigma;  // error locator, sigma[0] = 1
    int degree = 0;
};

// Berlekamp-Massey over GF(2^m); one decoder path for all t, shared by BCH
// and RS.
BmResult berlekamp_massey(const std::vector<GfElement>& syndromes, const Field& field) {
    std::vector<GfElement> cur{1}, prev{1};
    int len = 0;
    int shift = 1;
    GfElement prev_discrepancy = 1;
    for (std::size_t step = 0; step < syndromes.size(); ++step) {
        GfElement d = syndromes[step];
        for (int i = 1; i <= len; ++i) {
            if (i < static_cast<int>(cur.size())) {
                d ^= field.mul(cur[i], syndromes[step - i]);
            }
        }
        if (d == 0) {
            ++shift;
            continue;
        }
        const GfElement coef = field.mul(d, field.inv(prev_discrepancy));
        std::vector<GfElement> next = cur;
        if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, 0);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + shift] ^= field.mul(coef, prev[i]);
        }
        if (2 * len <= static_cast<int>(step)) {
            prev = cur;
            len = static_cast<int>(step) + 1 - len;
            prev_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
        cur = std::move(next);
    }
    return {cur, len};
}

GfElement eval_poly(const std::vector<GfElement>& poly, GfElement x, const Field& field) {
    GfElement acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = field.add(field.mul(acc, x), poly[i]);
    }
    return acc;
}

}  // namespace

const Field& CodeSpec::field() const {
    if (!field_) throw UnsupportedCode("code '" + name_ + "' has no GF(2^m) field");
    return *field_;
}

std::uint32_t CodeSpec::check_column(int u) const {
    if (u < 0 || u >= n_) throw LengthMismatch("unit position out of range");
    return columns_[u];
}

CodeSpec CodeSpec::hamming(int k) {
    if (k < 1) throw TooLarge("k must be positive");
    const int h = sec_parity_bits(k);
    if (k + h > 64) throw TooLarge("code length above 64 bits not supported");
    CodeSpec spec;
    spec.kind_ = CodeKind::Hamming;
    spec.k_ = k;
    spec.n_ = k + h;
    spec.t_ = 1;
    spec.name_ = "hamming" + std::to_string(spec.n_) + "_" + std::to_string(k);
    const auto cols = data_columns(h, k);
    spec.parity_rows_.assign(h, 0);
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < k; ++i) {
            if ((cols[i] >> j) & 1) spec.parity_rows_[j] |= 1ull << i;
        }
    }
    spec.finish_binary();
    return spec;
}

CodeSpec CodeSpec::extended_hamming(int k) {
    CodeSpec spec = hamming(k);
    if (spec.n_ + 1 > 64) throw TooLarge("code length above 64 bits not supported");
    spec.kind_ = CodeKind::ExtendedHamming;
    spec.n_ += 1;
    spec.name_ = "exthamming" + std::to_string(spec.n_) + "_" + std::to_string(k);
    // Overall parity bit covers every other bit; as a function of data alone
    // it is the all-ones row XOR the existing rows.
    std::uint64_t combined = (k == 64) ? ~0ull : ((1ull << k) - 1);
    for (auto row : spec.parity_rows_) combined ^= row;
    spec.parity_rows_.push_back(combined);
    spec.finish_binary();
    return spec;
}

CodeSpec CodeSpec::bch(const Field& field, int t) {
    const int n = static_cast<int>(field.order());
    if (n > 64) throw TooLarge("binary BCH above length 64 not supported");
    if (t < 1) throw UnsupportedCode("t must be >= 1");
    require_primitive_x(field);

    // Generator = product of the distinct minimal polynomials of
    // alpha^1 .. alpha^2t (cyclotomic cosets over GF(2)).
    std::set<int> covered;
    std::uint64_t gen = 1;
    for (int j = 1; j <= 2 * t; ++j) {
        if (covered.count(j % n)) continue;
        std::vector<int> coset;
        int c = j % n;
        while (!covered.count(c)) {
            covered.insert(c);
            coset.push_back(c);
            c = (2 * c) % n;
        }
        std::vector<GfElement> minpoly{1};
        for (int exp : coset) {
            const GfElement root = field.pow(2, exp);
            std::vector<GfElement> next(minpoly.size() + 1, 0);
            for (std::size_t d = 0; d < minpoly.size(); ++d) {
                next[d + 1] ^= minpoly[d];
                next[d] ^= field.mul(minpoly[d], root);
            }
            minpoly = std::move(next);
        }
        std::uint64_t mp_bits = 0;
        for (std::size_t d = 0; d < minpoly.size(); ++d) {
            if (minpoly[d] > 1) throw Error("minimal polynomial not binary");
            if (minpoly[d]) mp_bits |= 1ull << d;
        }
        gen = gf2poly::mul(gen, mp_bits);
    }

    const int deg = gf2poly::degree(gen);
    CodeSpec spec;
    spec.kind_ = CodeKind::Bch;
    spec.n_ = n;
    spec.k_ = n - deg;
    spec.t_ = t;
    spec.field_ = field;
    spec.gen_poly_bits_ = gen;
    spec.name_ = "bch" + std::to_string(n) + "_" + std::to_string(spec.k_);
    if (2 * t > deg) throw UnsupportedCode("2t exceeds n-k");

    // Systematic parity: column i = x^(n-k+i) mod g(x).
    spec.parity_rows_.assign(deg, 0);
    for (int i = 0; i < spec.k_; ++i) {
        const std::uint64_t col = gf2poly::mod(1ull << (deg + i), gen);
        for (int j = 0; j < deg; ++j) {
            if ((col >> j) & 1) spec.parity_rows_[j] |= 1ull << i;
        }
    }
    spec.finish_binary();
    spec.init_spectral();
    return spec;
}

CodeSpec CodeSpec::rs(const Field& field, int t) {
    const int n = static_cast<int>(field.order());
    if (t < 1 || 2 * t >= n) throw UnsupportedCode("invalid t for RS length");
    require_primitive_x(field);
    CodeSpec spec;
    spec.kind_ = CodeKind::Rs;
    spec.n_ = n;
    spec.k_ = n - 2 * t;
    spec.t_ = t;
    spec.field_ = field;
    spec.name_ = "rs" + std::to_string(n) + "_" + std::to_string(spec.k_);

    // g(x) = prod_{j=1..2t} (x - alpha^j), monic of degree 2t.
    std::vector<GfElement> gen{1};
    for (int j = 1; j <= 2 * t; ++j) {
        const GfElement root = field.pow(2, j);
        std::vector<GfElement> next(gen.size() + 1, 0);
        for (std::size_t d = 0; d < gen.size(); ++d) {
            next[d + 1] ^= gen[d];
            next[d] ^= field.mul(gen[d], root);
        }
        gen = std::move(next);
    }
    spec.gen_poly_ = std::move(gen);
    spec.init_spectral();
    return spec;
}

// Check supports, columns and the syndrome lookup table for binary codes.
// Syndrome bit j is the XOR of the word bits in check_supports_[j]; for
// ExtendedHamming the last support is the all-ones row, which is what makes
// double errors land outside the table.
void CodeSpec::finish_binary() {
    const int h = static_cast<int>(parity_rows_.size());
    check_supports_.assign(h, 0);
    for (int j = 0; j < h; ++j) {
        check_supports_[j] = parity_rows_[j] | (1ull << (k_ + j));
    }
    if (kind_ == CodeKind::ExtendedHamming) {
        check_supports_[h - 1] = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
    }
    columns_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
        for (int j = 0; j < h; ++j) {
            if ((check_supports_[j] >> u) & 1) columns_[u] |= 1u << j;
        }
    }
    if (kind_ == CodeKind::Hamming || kind_ == CodeKind::ExtendedHamming) {
        syndrome_position_.assign(1u << h, -1);
        for (int u = 0; u < n_; ++u) {
            if (syndrome_position_[columns_[u]] != -1) {
                throw Error("duplicate parity-check column");
            }
            syndrome_position_[columns_[u]] = u;
        }
    }
}

void CodeSpec::init_spectral() {
    unit_power_.assign(n_, 0);
    const int r = n_ - k_;
    for (int u = 0; u < n_; ++u) {
        unit_power_[u] = (u < k_) ? r + u : u - k_;
    }
    syndrome_powers_.assign(2 * t_, std::vector<GfElement>(n_, 0));
    for (int j = 0; j < 2 * t_; ++j) {
        for (int u = 0; u < n_; ++u) {
            syndrome_powers_[j][u] = field_->pow(2, static_cast<long long>(j + 1) * unit_power_[u]);
        }
    }
}

Codeword encode(const std::vector<std::uint16_t>& data, const CodeSpec& spec) {
    if (static_cast<int>(data.size()) != spec.k()) {
        throw LengthMismatch("data length " + std::to_string(data.size()) + " != k " +
                             std::to_string(spec.k()));
    }
    Codeword out;
    out.spec = &spec;
    out.units = data;
    out.units.resize(spec.n(), 0);
    if (spec.kind() == CodeKind::Rs) {
        const Field& f = spec.field();
        for (auto v : data) {
            if (v >= f.size()) throw Error("symbol out of field range");
        }
        // parity(x) = x^(n-k) * data(x) mod g(x)
        const int r = spec.n() - spec.k();
        std::vector<GfElement> work(spec.n(), 0);
        for (int i = 0; i < spec.k(); ++i) work[r + i] = data[i];
        const auto& g = spec.generator_poly();
        for (int d = spec.n() - 1; d >= r; --d) {
            const GfElement c = work[d];
            if (!c) continue;
            for (int i = 0; i <= r; ++i) {
                work[d - r + i] ^= f.mul(c, g[i]);
            }
        }
        for (int j = 0; j < r; ++j) out.units[spec.k() + j] = work[j];
    } else {
        std::uint64_t dmask = 0;
        for (int i = 0; i < spec.k(); ++i) {
            if (data[i] > 1) throw Error("binary code data must be bits");
            if (data[i]) dmask |= 1ull << i;
        }
        const auto& rows = spec.parity_rows();
        for (std::size_t j = 0; j < rows.size(); ++j) {
            out.units[spec.k() + j] = static_cast<std::uint16_t>(parity_of(dmask & rows[j]));
        }
    }
    return out;
}

Syndrome syndrome(const std::vector<std::uint16_t>& word, const CodeSpec& spec) {
    if (static_cast<int>(word.size()) != spec.n()) {
        throw LengthMismatch("word length " + std::to_string(word.size()) + " != n " +
                             std::to_string(spec.n()));
    }
    Syndrome s;
    if (spec.kind() == CodeKind::Rs) {
        const Field& f = spec.field();
        s.values.assign(2 * spec.correctable_distance(), 0);
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            GfElement acc = 0;
            for (int u = 0; u < spec.n(); ++u) {
                if (word[u]) acc ^= f.mul(word[u], spec.syndrome_power(static_cast<int>(j), u));
            }
            s.values[j] = acc;
        }
    } else {
        const auto& supports = spec.check_supports();
        std::uint64_t wmask = 0;
        for (int u = 0; u < spec.n(); ++u) {
            if (word[u] > 1) throw Error("binary code word must be bits");
            if (word[u]) wmask |= 1ull << u;
        }
        s.values.assign(supports.size(), 0);
        for (std::size_t j = 0; j < supports.size(); ++j) {
            s.values[j] = static_cast<std::uint16_t>(parity_of(wmask & supports[j]));
        }
    }
    return s;
}

namespace {

std::optional<Correction> correct_hamming(const std::vector<std::uint16_t>& word,
                                          const CodeSpec& spec) {
    const Syndrome s = syndrome(word, spec);
    std::uint32_t sval = 0;
    for (std::size_t j = 0; j < s.values.size(); ++j) {
        if (s.values[j]) sval |= 1u << j;
    }
    Correction result;
    result.data.assign(word.begin(), word.begin() + spec.k());
    if (sval == 0) return result;
    const std::int32_t pos = spec.syndrome_position(sval);
    if (pos < 0) return std::nullopt;  // shortened code or double error (SEC-DED)
    result.errors_found.push_back(pos);
    if (pos < spec.k()) result.data[pos] ^= 1;
    return result;
}

std::optional<Correction> correct_spectral(const std::vector<std::uint16_t>& word,
                                           const CodeSpec& spec) {
    const Field& f = spec.field();
    const bool binary = spec.kind() == CodeKind::Bch;
    const int t = spec.correctable_distance();

    std::vector<GfElement> syn(2 * t, 0);
    bool clean = true;
    for (int j = 0; j < 2 * t; ++j) {
        GfElement acc = 0;
        for (int u = 0; u < spec.n(); ++u) {
            if (!word[u]) continue;
            const GfElement p = spec.syndrome_power(j, u);
            acc ^= binary ? p : f.mul(word[u], p);
        }
        syn[j] = acc;
        if (acc) clean = false;
    }

    Correction result;
    result.data.assign(word.begin(), word.begin() + spec.k());
    if (clean) return result;

    const BmResult bm = berlekamp_massey(syn, f);
    if (bm.degree > t || bm.degree == 0) return std::nullopt;

    // Chien search over the codeword positions.
    std::vector<int> positions;
    std::vector<GfElement> locators;
    for (int u = 0; u < spec.n(); ++u) {
        const GfElement x_inv = f.pow(2, -spec.unit_power(u));
        if (eval_poly(bm.sigma, x_inv, f) == 0) {
            positions.push_back(u);
            locators.push_back(f.pow(2, spec.unit_power(u)));
        }
    }
    if (static_cast<int>(positions.size()) != bm.degree) return std::nullopt;

    std::vector<std::uint16_t> fixed = word;
    if (binary) {
        for (int u : positions) fixed[u] ^= 1;
    } else {
        // Forney: Y_i = Omega(X_i^-1) / sigma'(X_i^-1),
        // Omega = S(x) * sigma(x) mod x^2t.
        std::vector<GfElement> omega(2 * t, 0);
        for (int i = 0; i < 2 * t; ++i) {
            if (!syn[i]) continue;
            for (std::size_t j = 0; j < bm.sigma.size() && i + j < static_cast<std::size_t>(2 * t);
                 ++j) {
                omega[i + j] ^= f.mul(syn[i], bm.sigma[j]);
            }
        }
        for (std::size_t idx = 0; idx < positions.size(); ++idx) {
            const GfElement x_inv = f.inv(locators[idx]);
            GfElement deriv = 0;  // formal derivative keeps odd-degree terms
            for (std::size_t d = 1; d < bm.sigma.size(); d += 2) {
                deriv ^= f.mul(bm.sigma[d], f.pow(x_inv, static_cast<long long>(d - 1)));
            }
            if (deriv == 0) return std::nullopt;
            const GfElement magnitude = f.mul(eval_poly(omega, x_inv, f), f.inv(deriv));
            if (magnitude == 0) return std::nullopt;
            fixed[positions[idx]] ^= magnitude;
        }
    }

    // The corrected word must be a codeword; otherwise the pattern was
    // outside the decoding radius.
    if (!syndrome(fixed, spec).is_zero()) return std::nullopt;

    result.data.assign(fixed.begin(), fixed.begin() + spec.k());
    result.errors_found = positions;
    return result;
}

}  // namespace

std::optional<Correction> correct(const std::vector<std::uint16_t>& word, const CodeSpec& spec) {
    if (static_cast<int>(word.size()) != spec.n()) {
        throw LengthMismatch("word length != n");
    }
    switch (spec.kind()) {
        case CodeKind::Hamming:
        case CodeKind::ExtendedHamming:
            return correct_hamming(word, spec);
        case CodeKind::Bch:
        case CodeKind::Rs:
            return correct_spectral(word, spec);
    }
    throw Error("unreachable");
}

int min_distance(const CodeSpec& spec) {
    if (spec.kind() == CodeKind::Rs) return spec.n() - spec.k() + 1;  // MDS
    if (spec.k() > 20) throw TooLarge("brute-force distance bound is 2^20 codewords");
    const auto& rows = spec.parity_rows();
    int best = spec.n() + 1;
    for (std::uint64_t d = 1; d < (1ull << spec.k()); ++d) {
        int w = std::popcount(d);
        for (auto row : rows) w += static_cast<int>(parity_of(d & row));
        best = std::min(best, w);
    }
    return best;
}

std::vector<std::uint16_t> value_to_units(std::uint64_t value, int width) {
    std::vector<std::uint16_t> units(width, 0);
    for (int i = 0; i < width; ++i) units[i] = (value >> i) & 1;
    return units;
}

std::uint64_t units_to_value(const std::vector<std::uint16_t>& units) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i]) v |= 1ull << i;
    }
    return v;
}

CodeSpec code_by_name(const std::string& name) {
    if (name == "hamming7_4") return CodeSpec::hamming(4);
    if (name == "exthamming8_4") return CodeSpec::extended_hamming(4);
    if (name == "hamming38_32") return CodeSpec::hamming(32);
    if (name == "exthamming39_32") return CodeSpec::extended_hamming(32);
    if (name == "bch15_7") return CodeSpec::bch(gf16(), 2);
    if (name == "rs7_3") return CodeSpec::rs(gf8(), 2);
    throw UnsupportedCode("unknown code '" + name + "'");
}

std::vector<std::string> code_names() {
    return {"hamming7_4", "exthamming8_4", "hamming38_32",
            "exthamming39_32", "bch15_7", "rs7_3"};
}

}  // namespace eccalu
