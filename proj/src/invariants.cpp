#include "alex3/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace alex3 {

InvariantTuple normalized(InvariantTuple t) {
    std::sort(t.exceptional.begin(), t.exceptional.end());
    std::sort(t.singular.begin(), t.singular.end());
    return t;
}

//---------------------------------------------------------------------------
// parsing
//---------------------------------------------------------------------------

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of input", pos_);
        return s_[pos_];
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    i64 integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer", start);
        i64 value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int digit = s_[pos_] - '0';
            if (value > (INT64_MAX - digit) / 10)
                throw ParseError("integer out of range", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return neg ? -value : value;
    }

    Orientation orientation_symbol() {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == 'o' || s_[pos_] == 'n'))
            return s_[pos_++] == 'o' ? Orientation::Orientable : Orientation::Nonorientable;
        throw ParseError("expected orientation symbol 'o' or 'n'", pos_);
    }

    void end() {
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing input after tuple", pos_);
    }

    std::size_t pos() const { return pos_; }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

InvariantTuple parse_tuple(const std::string& text) {
    Cursor c(text);
    InvariantTuple t;

    c.expect('(');
    t.b = c.integer();
    c.expect(';');

    c.expect('(');
    t.surface.orient = c.orientation_symbol();
    c.expect(',');
    t.surface.genus = c.integer();
    c.expect(',');
    t.fixed_circles = c.integer();
    c.expect(',');
    t.se_circles = c.integer();
    c.expect(')');
    c.expect(';');

    c.expect('[');
    if (!c.accept(']')) {
        do {
            c.expect('(');
            SeifertPair p;
            p.alpha = c.integer();
            c.expect(',');
            p.beta = c.integer();
            c.expect(')');
            t.exceptional.push_back(p);
        } while (c.accept(','));
        c.expect(']');
    }
    c.expect(';');

    c.expect('[');
    if (!c.accept(']')) {
        do {
            t.singular.push_back(c.integer());
        } while (c.accept(','));
        c.expect(']');
    }
    c.expect(')');
    c.end();

    return normalized(std::move(t));
}

std::string serialize_tuple(const InvariantTuple& t) {
    std::ostringstream out;
    out << '(' << t.b << ";(" << (t.surface.orientable() ? 'o' : 'n') << ','
        << t.surface.genus << ',' << t.fixed_circles << ',' << t.se_circles << ");[";
    for (std::size_t i = 0; i < t.exceptional.size(); ++i) {
        if (i)
            out << ',';
        out << '(' << t.exceptional[i].alpha << ',' << t.exceptional[i].beta << ')';
    }
    out << "];[";
    for (std::size_t i = 0; i < t.singular.size(); ++i) {
        if (i)
            out << ',';
        out << t.singular[i];
    }
    out << "])";
    return out.str();
}

//---------------------------------------------------------------------------
// validation
//---------------------------------------------------------------------------

ValidationReport validate(const InvariantTuple& t) {
    ValidationReport report;
    auto flag = [&](std::string rule, std::string message) {
        report.violations.push_back({std::move(rule), std::move(message)});
    };

    if (t.surface.genus < 0)
        flag("surface.genus", "genus must be non-negative");
    if (!t.surface.orientable() && t.surface.genus < 1)
        flag("surface.crosscaps", "nonorientable genus counts cross-caps and must be >= 1");
    if (t.fixed_circles < 0)
        flag("counts.f", "f must be non-negative");
    if (t.se_circles < 0)
        flag("counts.t", "t must be non-negative");

    for (std::size_t i = 0; i < t.exceptional.size(); ++i) {
        const SeifertPair& p = t.exceptional[i];
        std::string where = "pair " + std::to_string(i) + " (" + std::to_string(p.alpha) +
                            "," + std::to_string(p.beta) + ")";
        if (p.alpha < 2)
            flag("pair.alpha", where + ": alpha >= 2 required");
        if (p.beta <= 0 || p.beta >= p.alpha)
            flag("pair.beta", where + ": 0 < beta < alpha required");
        else if (std::gcd(p.alpha, p.beta) != 1)
            flag("pair.coprime", where + ": gcd(alpha,beta)=1 required");
    }

    for (std::size_t i = 0; i < t.singular.size(); ++i) {
        i64 r = t.singular[i];
        if (r < 2)
            flag("singular.positive",
                 "r_" + std::to_string(i) + " = " + std::to_string(r) + " must be >= 2");
        if (r % 2 != 0)
            flag("singular.even",
                 "r_" + std::to_string(i) + " = " + std::to_string(r) + " must be even");
    }

    if (t.boundary_class_count() > 0 && t.b != 0)
        flag("b.boundary", "b=0 required when the orbit space has boundary (f+t+s > 0)");

    report.ok = report.violations.empty();
    return report;
}

bool is_valid(const InvariantTuple& t) { return validate(t).ok; }

i64 singular_point_count(const InvariantTuple& t) {
    return std::accumulate(t.singular.begin(), t.singular.end(), i64{0});
}

//---------------------------------------------------------------------------
// JSON form
//---------------------------------------------------------------------------

nlohmann::json tuple_to_json(const InvariantTuple& t) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const SeifertPair& p : t.exceptional)
        pairs.push_back({p.alpha, p.beta});
    return {
        {"b", t.b},
        {"eps", t.surface.orientable() ? "o" : "n"},
        {"g", t.surface.genus},
        {"f", t.fixed_circles},
        {"t", t.se_circles},
        {"pairs", pairs},
        {"singular", t.singular},
    };
}

InvariantTuple tuple_from_json(const nlohmann::json& j) {
    InvariantTuple t;
    try {
        t.b = j.at("b").get<i64>();
        std::string eps = j.at("eps").get<std::string>();
        if (eps != "o" && eps != "n")
            throw DomainError("eps must be \"o\" or \"n\"");
        t.surface.orient = eps == "o" ? Orientation::Orientable : Orientation::Nonorientable;
        t.surface.genus = j.at("g").get<i64>();
        t.fixed_circles = j.at("f").get<i64>();
        t.se_circles = j.at("t").get<i64>();
        for (const auto& p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 2)
                throw DomainError("each pair must be a 2-element array");
            t.exceptional.push_back({p[0].get<i64>(), p[1].get<i64>()});
        }
        t.singular = j.at("singular").get<std::vector<i64>>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed tuple JSON: ") + e.what());
    }
    return normalized(std::move(t));
}

nlohmann::json report_to_json(const ValidationReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"rule", v.rule}, {"message", v.message}});
    return {{"ok", r.ok}, {"violations", violations}};
}

} // namespace alex3
