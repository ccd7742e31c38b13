#ifndef HILBKX_SURFACE_DATA_HPP
#define HILBKX_SURFACE_DATA_HPP

#include <hilbkx/errors.hpp>
#include <hilbkx/random.hpp>
#include <hilbkx/rational.hpp>

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbkx {

// Index of a structure constant a_{ijk} of  phi_j ^ phi_k = sum_i a_{ijk} psi_i.
// Zero-based in the API; every piece of external text uses 1-based indices.
struct Slot {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    auto operator<=>(const Slot&) const = default;

    std::string str() const {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
    }
};

/*
 * Alternating structure constants of the cup product H^1 x H^1 -> H^2.
 *
 * Storage is sparse and keeps only the canonical slots j < k. The full
 * tensor is recovered on lookup by antisymmetric completion, so
 * a_{ijk} = -a_{ikj} and a_{ijj} = 0 hold by construction for every tensor
 * built through make(). raw() bypasses the checks; it exists so that
 * validate() can be exercised on deliberately broken storage.
 */
class CupTensor {
public:
    using Entries = std::map<Slot, Rational>;

    CupTensor() = default;
    CupTensor(std::size_t p, std::size_t q) : p_(p), q_(q) {}

    // Checked construction: indices in range, j < k. Zero values are dropped.
    static CupTensor make(std::size_t p, std::size_t q, const Entries& entries) {
        CupTensor t(p, q);
        for (const auto& [s, v] : entries) {
            if (s.i >= p || s.j >= q || s.k >= q)
                throw std::invalid_argument("tensor entry " + s.str() + " outside declared ranges");
            if (s.j >= s.k)
                throw std::invalid_argument("tensor entry " + s.str() +
                                            ": indices must satisfy j<k (a_ikj = -a_ijk is implied)");
            if (v != 0) t.entries_.emplace(s, v);
        }
        return t;
    }

    static CupTensor raw(std::size_t p, std::size_t q, Entries entries) {
        CupTensor t(p, q);
        t.entries_ = std::move(entries);
        return t;
    }

    std::size_t p() const { return p_; }
    std::size_t q() const { return q_; }
    const Entries& stored() const { return entries_; }

    // Completed a_{ijk}.
    Rational at(std::size_t i, std::size_t j, std::size_t k) const {
        if (auto it = entries_.find({i, j, k}); it != entries_.end()) return it->second;
        if (auto it = entries_.find({i, k, j}); it != entries_.end()) return -it->second;
        return Rational(0);
    }

    friend bool operator==(const CupTensor&, const CupTensor&) = default;

private:
    std::size_t p_ = 0;
    std::size_t q_ = 0;
    Entries entries_;
};

struct Violation {
    enum class Kind { OutOfRange, NotAlternating, NonzeroDiagonal };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks that stored indices are in range and that the completion is
// alternating. Violations are report content, never exceptions.
inline ValidationReport validate(const CupTensor& t) {
    ValidationReport report;
    const auto& e = t.stored();
    for (const auto& [s, v] : e) {
        if (s.i >= t.p() || s.j >= t.q() || s.k >= t.q()) {
            report.violations.push_back({Violation::Kind::OutOfRange,
                                         "entry " + s.str() + " outside declared ranges p=" + std::to_string(t.p()) +
                                             ", q=" + std::to_string(t.q())});
            continue;
        }
        if (s.j == s.k) {
            if (v != 0)
                report.violations.push_back({Violation::Kind::NonzeroDiagonal,
                                             "entry " + s.str() + " = " + to_string(v) + " on the diagonal j=k"});
            continue;
        }
        if (s.j < s.k) {
            auto mirror = e.find({s.i, s.k, s.j});
            if (mirror != e.end() && v + mirror->second != 0) {
                Slot m{s.i, s.k, s.j};
                report.violations.push_back({Violation::Kind::NotAlternating,
                                             "entries " + s.str() + "/" + m.str() + " = " + to_string(v) + "/" +
                                                 to_string(mirror->second) + " are not antisymmetric"});
            }
        }
    }
    return report;
}

struct IntersectionData {
    long long kx_kx = 0;
    std::optional<long long> gamma_gamma;
    std::optional<long long> gamma_k;

    friend bool operator==(const IntersectionData&, const IntersectionData&) = default;
};

// Hodge data of a surface together with its cup-product tensor.
// q and p are read from the tensor, so the two can never disagree.
struct SurfaceSpec {
    std::string label;
    CupTensor tensor;
    std::optional<IntersectionData> intersection;

    std::size_t q() const { return tensor.q(); }
    std::size_t p() const { return tensor.p(); }

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

// chi(O_X) = 1 - q + p.
inline long long euler_characteristic(const SurfaceSpec& spec) {
    return 1 - static_cast<long long>(spec.q()) + static_cast<long long>(spec.p());
}

// gamma.(gamma - k_X).
inline long long virtual_dimension(long long gamma_gamma, long long gamma_k) { return gamma_gamma - gamma_k; }

// Product of curves C1 x C2 of genera g1, g2 (Kuenneth model).
// H^1 basis: alpha_1..alpha_g1, beta_1..beta_g2. H^2 basis: psi_(a,b) in
// lexicographic order, with alpha_a ^ beta_b = psi_(a,b) and all
// alpha^alpha, beta^beta products zero.
inline SurfaceSpec product_of_curves(std::size_t g1, std::size_t g2) {
    CupTensor::Entries e;
    for (std::size_t a = 0; a < g1; ++a)
        for (std::size_t b = 0; b < g2; ++b) e[{a * g2 + b, a, g1 + b}] = 1;
    SurfaceSpec spec;
    spec.label = "product_of_curves(" + std::to_string(g1) + "," + std::to_string(g2) + ")";
    spec.tensor = CupTensor::make(g1 * g2, g1 + g2, e);
    const auto k = static_cast<long long>(g1) - 1, l = static_cast<long long>(g2) - 1;
    spec.intersection = IntersectionData{8 * k * l, std::nullopt, std::nullopt};
    return spec;
}

// Property-test generator: each canonical slot (i, j<k) is nonzero with
// probability `density`, values uniform in [-9, 9] \ {0}.
inline CupTensor random_tensor(std::size_t p, std::size_t q, std::uint64_t seed, const Rational& density) {
    if (density < 0 || density > 1) throw std::invalid_argument("density must lie in [0,1]");
    if (!density.get_num().fits_ulong_p() || !density.get_den().fits_ulong_p())
        throw std::invalid_argument("density numerator/denominator too large");
    const std::uint64_t num = density.get_num().get_ui(), den = density.get_den().get_ui();
    Rng rng(mix64(seed));
    CupTensor::Entries e;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = j + 1; k < q; ++k) {
                if (!rng.bernoulli(num, den)) continue;
                auto v = rng.uniform(-9, 8);
                if (v >= 0) ++v;
                e[{i, j, k}] = Rational(static_cast<long>(v));
            }
    return CupTensor::make(p, q, e);
}

// ---------------------------------------------------------------------------
// Spec file format (JSON):
//   { "label": "...", "q": 4, "p": 4,
//     "tensor": [ {"i": 1, "j": 1, "k": 3, "value": "1"}, ... ],
//     "intersection": {"kx_kx": 8, "gamma_gamma": 8, "gamma_k": 8} }
// Indices are 1-based with j < k. `intersection` and its gamma fields are
// optional; unknown fields are rejected.

class SpecError : public std::runtime_error {
public:
    enum class Kind { Syntax, Schema, Convention, Duplicate, IndexOutOfRange };

    SpecError(Kind kind, std::string location, const std::string& what)
        : std::runtime_error(location.empty() ? what : location + ": " + what),
          kind_(kind),
          location_(std::move(location)) {}

    Kind kind() const { return kind_; }
    const std::string& location() const { return location_; }

private:
    Kind kind_;
    std::string location_;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown_fields(const json& obj, std::initializer_list<std::string_view> allowed,
                                  const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || item.key() == a;
        if (!known)
            throw SpecError(SpecError::Kind::Schema, where.empty() ? item.key() : where + "." + item.key(),
                            "unknown field");
    }
}

inline std::uint64_t require_count(const json& obj, const char* key, const std::string& where, bool positive) {
    const std::string loc = where.empty() ? key : where + "." + key;
    if (!obj.contains(key)) throw SpecError(SpecError::Kind::Schema, loc, "missing field");
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() || (positive && v.get<std::uint64_t>() == 0))
        throw SpecError(SpecError::Kind::Schema, loc,
                        positive ? "expected a positive integer" : "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

inline std::optional<long long> optional_integer(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw SpecError(SpecError::Kind::Schema, where + "." + key, "expected an integer");
    return v.get<long long>();
}

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t b = 0; b + 1 < byte && b < text.size(); ++b) {
        if (text[b] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

// Parses and schema-checks a spec document. Indices are checked for the
// j<k convention and duplicates but not against the declared (p, q); the
// returned tensor is raw so validate() can report range violations.
inline SurfaceSpec parse_spec_document(std::string_view text) {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(SpecError::Kind::Syntax, detail::line_column(text, e.byte), "malformed document");
    }
    if (!doc.is_object()) throw SpecError(SpecError::Kind::Schema, "", "document must be an object");
    detail::reject_unknown_fields(doc, {"label", "q", "p", "tensor", "intersection"}, "");

    SurfaceSpec spec;
    if (!doc.contains("label") || !doc.at("label").is_string())
        throw SpecError(SpecError::Kind::Schema, "label", "expected a string");
    spec.label = doc.at("label").get<std::string>();
    const auto q = detail::require_count(doc, "q", "", false);
    const auto p = detail::require_count(doc, "p", "", false);

    CupTensor::Entries entries;
    if (doc.contains("tensor")) {
        const auto& arr = doc.at("tensor");
        if (!arr.is_array()) throw SpecError(SpecError::Kind::Schema, "tensor", "expected an array");
        std::set<Slot> seen;
        for (std::size_t n = 0; n < arr.size(); ++n) {
            const std::string where = "tensor[" + std::to_string(n) + "]";
            const auto& rec = arr[n];
            if (!rec.is_object()) throw SpecError(SpecError::Kind::Schema, where, "expected an object");
            detail::reject_unknown_fields(rec, {"i", "j", "k", "value"}, where);
            const auto i = detail::require_count(rec, "i", where, true);
            const auto j = detail::require_count(rec, "j", where, true);
            const auto k = detail::require_count(rec, "k", where, true);
            if (!rec.contains("value") || !rec.at("value").is_string())
                throw SpecError(SpecError::Kind::Schema, where + ".value", "expected a string \"num\" or \"num/den\"");
            auto value = parse_rational(rec.at("value").get<std::string>());
            if (!value)
                throw SpecError(SpecError::Kind::Schema, where + ".value",
                                "not a rational: '" + rec.at("value").get<std::string>() + "'");
            Slot s{i - 1, j - 1, k - 1};
            if (j >= k)
                throw SpecError(SpecError::Kind::Convention, where,
                                "entry " + s.str() + ": indices must satisfy j<k (a_ikj = -a_ijk is implied)");
            if (!seen.insert(s).second)
                throw SpecError(SpecError::Kind::Duplicate, where, "duplicate entry " + s.str());
            if (*value != 0) entries.emplace(s, *value);
        }
    }
    spec.tensor = CupTensor::raw(p, q, std::move(entries));

    if (doc.contains("intersection")) {
        const auto& rec = doc.at("intersection");
        if (!rec.is_object()) throw SpecError(SpecError::Kind::Schema, "intersection", "expected an object");
        detail::reject_unknown_fields(rec, {"kx_kx", "gamma_gamma", "gamma_k"}, "intersection");
        auto kk = detail::optional_integer(rec, "kx_kx", "intersection");
        if (!kk) throw SpecError(SpecError::Kind::Schema, "intersection.kx_kx", "missing field");
        spec.intersection = IntersectionData{*kk, detail::optional_integer(rec, "gamma_gamma", "intersection"),
                                             detail::optional_integer(rec, "gamma_k", "intersection")};
    }
    return spec;
}

// Full load: parse, then require every index to lie within (p, q).
inline SurfaceSpec load_spec(std::string_view text) {
    auto spec = parse_spec_document(text);
    auto report = validate(spec.tensor);
    if (!report.ok()) throw SpecError(SpecError::Kind::IndexOutOfRange, "tensor", report.violations.front().message);
    spec.tensor = CupTensor::make(spec.p(), spec.q(), spec.tensor.stored());
    return spec;
}

inline std::string serialize_spec(const SurfaceSpec& spec) {
    using detail::json;
    json doc;
    doc["label"] = spec.label;
    doc["q"] = spec.q();
    doc["p"] = spec.p();
    json tensor = json::array();
    for (const auto& [s, v] : spec.tensor.stored())
        tensor.push_back({{"i", s.i + 1}, {"j", s.j + 1}, {"k", s.k + 1}, {"value", to_string(v)}});
    doc["tensor"] = std::move(tensor);
    if (spec.intersection) {
        json rec{{"kx_kx", spec.intersection->kx_kx}};
        if (spec.intersection->gamma_gamma) rec["gamma_gamma"] = *spec.intersection->gamma_gamma;
        if (spec.intersection->gamma_k) rec["gamma_k"] = *spec.intersection->gamma_k;
        doc["intersection"] = std::move(rec);
    }
    return doc.dump(2) + "\n";
}

}  // namespace hilbkx

#endif  // HILBKX_SURFACE_DATA_HPP
