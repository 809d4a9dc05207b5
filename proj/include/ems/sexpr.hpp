#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ems/errors.hpp"
#include "ems/landmarks.hpp"
#include "ems/util.hpp"

namespace ems {

// Spatial descriptors over landmarks. Arities: near/within/behind/infrontof/
// totheleftof/totherightof take one landmark, withindist one landmark plus a
// distance in meters, between two landmarks, indoor/outdoor none.
enum class DescriptorKind {
    near,
    within,
    withindist,
    between,
    behind,
    infrontof,
    totheleftof,
    totherightof,
    indoor,
    outdoor,
};

inline const char* descriptor_name(DescriptorKind k) {
    switch (k) {
        case DescriptorKind::near: return "near";
        case DescriptorKind::within: return "within";
        case DescriptorKind::withindist: return "withindist";
        case DescriptorKind::between: return "between";
        case DescriptorKind::behind: return "behind";
        case DescriptorKind::infrontof: return "infrontof";
        case DescriptorKind::totheleftof: return "totheleftof";
        case DescriptorKind::totherightof: return "totherightof";
        case DescriptorKind::indoor: return "indoor";
        case DescriptorKind::outdoor: return "outdoor";
    }
    return "?";
}

inline std::optional<DescriptorKind> descriptor_from(std::string_view name) {
    std::string n = to_lower(name);
    static const std::array<std::pair<const char*, DescriptorKind>, 10> table{{
        {"near", DescriptorKind::near},
        {"within", DescriptorKind::within},
        {"withindist", DescriptorKind::withindist},
        {"between", DescriptorKind::between},
        {"behind", DescriptorKind::behind},
        {"infrontof", DescriptorKind::infrontof},
        {"totheleftof", DescriptorKind::totheleftof},
        {"totherightof", DescriptorKind::totherightof},
        {"indoor", DescriptorKind::indoor},
        {"outdoor", DescriptorKind::outdoor},
    }};
    for (auto [s, k] : table)
        if (n == s) return k;
    return std::nullopt;
}

inline size_t descriptor_arity(DescriptorKind k) {
    switch (k) {
        case DescriptorKind::between: return 2;
        case DescriptorKind::indoor:
        case DescriptorKind::outdoor: return 0;
        default: return 1;  // withindist's distance is a separate parameter
    }
}

struct SDescriptor {
    DescriptorKind kind = DescriptorKind::near;
    std::vector<std::string> landmarks;
    double distance = 0;  // only for withindist, > 0

    bool operator==(const SDescriptor&) const = default;
};

// AND-expression: a nonempty conjunction of descriptors in input order.
// Duplicates are dropped during normalization.
struct SExpression {
    std::vector<SDescriptor> conjuncts;

    bool operator==(const SExpression&) const = default;
};

// ------------------------------------------------------------ parsing

namespace detail {

[[noreturn]] inline void parse_fail(errc code, const std::string& msg, size_t offset) {
    throw Error(code, msg + " at byte " + std::to_string(offset));
}

}  // namespace detail

// Grammar: expr := desc ('&' desc)*, desc := kind ['(' args ')'].
// Kind names are case-insensitive, whitespace is free. '|' is rejected.
inline SExpression parse(std::string_view text) {
    SExpression out;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto check_or = [&] {
        if (i < n && text[i] == '|')
            detail::parse_fail(errc::unsupported_or, "OR-expressions are not supported", i);
    };

    skip_ws();
    if (i >= n) detail::parse_fail(errc::parse_error, "empty s-expression", i);
    while (true) {
        skip_ws();
        check_or();
        size_t name_start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        if (i == name_start)
            detail::parse_fail(errc::parse_error, "expected descriptor name", i);
        std::string name(text.substr(name_start, i - name_start));
        auto kind = descriptor_from(name);
        if (!kind)
            detail::parse_fail(errc::unknown_descriptor, "unknown descriptor '" + name + "'",
                               name_start);
        SDescriptor d;
        d.kind = *kind;
        skip_ws();
        std::vector<std::string> args;
        if (i < n && text[i] == '(') {
            ++i;
            size_t arg_start = i;
            std::string cur;
            bool closed = false;
            while (i < n) {
                char c = text[i];
                if (c == ')' || c == ',') {
                    std::string token(trim(std::string_view(text.substr(arg_start, i - arg_start))));
                    if (!token.empty() || !(args.empty() && c == ')')) args.push_back(token);
                    ++i;
                    if (c == ')') {
                        closed = true;
                        break;
                    }
                    arg_start = i;
                } else if (c == '(' || c == '&' || c == '|') {
                    detail::parse_fail(errc::parse_error, "unexpected character in argument list",
                                       i);
                } else {
                    ++i;
                }
            }
            if (!closed) detail::parse_fail(errc::parse_error, "missing ')'", i);
            for (const auto& a : args)
                if (a.empty()) detail::parse_fail(errc::parse_error, "empty argument", arg_start);
        }

        size_t arity = descriptor_arity(*kind);
        if (*kind == DescriptorKind::withindist) {
            if (args.size() != 2)
                detail::parse_fail(errc::arity_error,
                                   "withindist takes a landmark and a distance", name_start);
            d.landmarks = {args[0]};
            try {
                size_t pos = 0;
                d.distance = std::stod(args[1], &pos);
                if (pos != args[1].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                detail::parse_fail(errc::parse_error, "bad distance '" + args[1] + "'", name_start);
            }
            if (d.distance <= 0)
                detail::parse_fail(errc::arity_error, "withindist distance must be > 0",
                                   name_start);
        } else {
            if (args.size() != arity)
                detail::parse_fail(errc::arity_error,
                                   std::string(descriptor_name(*kind)) + " takes " +
                                       std::to_string(arity) + " landmark(s), got " +
                                       std::to_string(args.size()),
                                   name_start);
            d.landmarks = std::move(args);
        }

        if (std::find(out.conjuncts.begin(), out.conjuncts.end(), d) == out.conjuncts.end())
            out.conjuncts.push_back(std::move(d));

        skip_ws();
        check_or();
        if (i >= n) break;
        if (text[i] != '&')
            detail::parse_fail(errc::parse_error, "expected '&' between descriptors", i);
        ++i;
    }
    return out;
}

// Canonical textual form; parse(render(e)) == e.
inline std::string render(const SDescriptor& d) {
    std::string s = descriptor_name(d.kind);
    if (descriptor_arity(d.kind) == 0 && d.kind != DescriptorKind::withindist) return s;
    s += "(";
    for (size_t i = 0; i < d.landmarks.size(); ++i) {
        if (i) s += ", ";
        s += d.landmarks[i];
    }
    if (d.kind == DescriptorKind::withindist) s += ", " + format_double(d.distance);
    s += ")";
    return s;
}

inline std::string render(const SExpression& e) {
    std::string s;
    for (size_t i = 0; i < e.conjuncts.size(); ++i) {
        if (i) s += " & ";
        s += render(e.conjuncts[i]);
    }
    return s;
}

// ------------------------------------------------------------ templates

// Template mapper for stylized location phrases. Supported forms:
//   "near <L>"                      -> near(L)
//   "between <L1> and <L2>"         -> between(L1, L2)
//   "on <L1>, near <L2>"            -> within(L1) & near(L2)
//   "on <L1> between <L2> and <L3>" -> within(L1) & between(L2, L3)
//   "inside <L>"                    -> within(L)
//   "outside"                       -> outdoor
// Landmark tokens resolve through LandmarkMap::resolve (case folding plus
// noise-word stripping). Anything else is a no-template-match error.
inline SExpression map_template(std::string_view phrase, const LandmarkMap& landmarks) {
    std::string p = normalize_spaces(phrase);
    std::string low = to_lower(p);
    auto lm = [&](const std::string& token) -> std::string {
        return landmarks.resolve(std::string(trim(token))).id;
    };
    auto starts = [&](const char* prefix) {
        return low.rfind(prefix, 0) == 0;
    };

    if (low == "outside") return SExpression{{SDescriptor{DescriptorKind::outdoor, {}, 0}}};

    if (starts("on ")) {
        std::string rest = p.substr(3);
        std::string rest_low = low.substr(3);
        size_t betw = rest_low.find(" between ");
        if (betw != std::string::npos) {
            std::string l1 = rest.substr(0, betw);
            std::string tail = rest.substr(betw + 9);
            std::string tail_low = rest_low.substr(betw + 9);
            size_t andp = tail_low.find(" and ");
            if (andp != std::string::npos) {
                std::string l2 = tail.substr(0, andp);
                std::string l3 = tail.substr(andp + 5);
                return SExpression{{SDescriptor{DescriptorKind::within, {lm(l1)}, 0},
                                    SDescriptor{DescriptorKind::between, {lm(l2), lm(l3)}, 0}}};
            }
        }
        size_t nearp = rest_low.find(" near ");
        size_t comma = rest.find(',');
        if (comma != std::string::npos &&
            to_lower(normalize_spaces(rest.substr(comma + 1))).rfind("near ", 0) == 0) {
            std::string l1 = rest.substr(0, comma);
            std::string l2 = normalize_spaces(rest.substr(comma + 1)).substr(5);
            return SExpression{{SDescriptor{DescriptorKind::within, {lm(l1)}, 0},
                                SDescriptor{DescriptorKind::near, {lm(l2)}, 0}}};
        }
        if (nearp != std::string::npos) {
            std::string l1 = rest.substr(0, nearp);
            std::string l2 = rest.substr(nearp + 6);
            return SExpression{{SDescriptor{DescriptorKind::within, {lm(l1)}, 0},
                                SDescriptor{DescriptorKind::near, {lm(l2)}, 0}}};
        }
        throw Error(errc::no_template_match, "unmatched phrase: " + p);
    }

    if (starts("between ")) {
        std::string rest = p.substr(8);
        size_t andp = to_lower(rest).find(" and ");
        if (andp != std::string::npos) {
            std::string l1 = rest.substr(0, andp);
            std::string l2 = rest.substr(andp + 5);
            return SExpression{{SDescriptor{DescriptorKind::between, {lm(l1), lm(l2)}, 0}}};
        }
        throw Error(errc::no_template_match, "unmatched phrase: " + p);
    }

    if (starts("near ")) return SExpression{{SDescriptor{DescriptorKind::near, {lm(p.substr(5))}, 0}}};
    if (starts("inside "))
        return SExpression{{SDescriptor{DescriptorKind::within, {lm(p.substr(7))}, 0}}};

    throw Error(errc::no_template_match, "unmatched phrase: " + p);
}

}  // namespace ems
