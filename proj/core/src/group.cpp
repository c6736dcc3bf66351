#include "nonreg/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "nonreg/error.hpp"

namespace nonreg::group {

GroupSpec zk(std::size_t k) {
    if (k == 0) throw PreconditionError("Z^k needs k >= 1");
    return GroupSpec{{Zk{k}}};
}

GroupSpec zmod(std::int64_t m) {
    if (m < 2) throw PreconditionError("Zmod m needs m >= 2");
    return GroupSpec{{ZMod{m}}};
}

GroupSpec free_group(std::size_t rank) {
    if (rank == 0) throw PreconditionError("free group needs rank >= 1");
    return GroupSpec{{Free{rank}}};
}

GroupSpec product(const std::vector<GroupSpec>& parts) {
    GroupSpec out;
    for (const auto& p : parts) out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
    if (out.factors.empty()) throw PreconditionError("empty product");
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class T>
T parse_number(std::string_view s, std::string_view what) {
    s = trim(s);
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(ParseError::Kind::Syntax, 0, "bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        else if (s[i] == ')' || s[i] == ']') --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(begin, i - begin));
            begin = i + 1;
        }
    }
    out.push_back(s.substr(begin));
    return out;
}

Factor parse_factor(std::string_view t) {
    t = trim(t);
    if (t.rfind("Z^", 0) == 0) {
        auto k = parse_number<std::size_t>(t.substr(2), "rank");
        if (k == 0) throw ParseError(ParseError::Kind::Syntax, 0, "Z^k needs k >= 1");
        return Zk{k};
    }
    if (t.rfind("Zmod", 0) == 0) {
        auto m = parse_number<std::int64_t>(t.substr(4), "modulus");
        if (m < 2) throw ParseError(ParseError::Kind::Syntax, 0, "Zmod m needs m >= 2");
        return ZMod{m};
    }
    if (t.rfind("F", 0) == 0) {
        auto r = parse_number<std::size_t>(t.substr(1), "rank");
        if (r == 0) throw ParseError(ParseError::Kind::Syntax, 0, "F r needs r >= 1");
        return Free{r};
    }
    throw ParseError(ParseError::Kind::Syntax, 0, "unknown group '" + std::string(t) + "'");
}

void append_reduced(FreeWord& w, int g) {
    if (!w.empty() && w.back() == -g) w.pop_back();
    else w.push_back(g);
}

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Component identity_component(const Factor& f) {
    return std::visit(
        [](const auto& x) -> Component {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Zk>) return std::vector<Int>(x.k, Int(0));
            else if constexpr (std::is_same_v<T, ZMod>) return std::int64_t{0};
            else return FreeWord{};
        },
        f);
}

Component parse_component(const Factor& f, std::string_view t) {
    t = trim(t);
    if (const auto* z = std::get_if<Zk>(&f)) {
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
            throw ParseError(ParseError::Kind::Syntax, 0, "expected [i1,...,ik], got '" + std::string(t) + "'");
        }
        std::vector<Int> v;
        auto inner = trim(t.substr(1, t.size() - 2));
        if (!inner.empty()) {
            for (auto part : split_top(inner, ',')) {
                part = trim(part);
                std::string digits(part);
                bool ok = !digits.empty();
                for (std::size_t i = 0; i < digits.size(); ++i) {
                    char c = digits[i];
                    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1))) ok = false;
                }
                if (!ok) throw ParseError(ParseError::Kind::Syntax, 0, "bad integer '" + digits + "'");
                v.emplace_back(digits);
            }
        }
        if (v.size() != z->k) {
            throw ParseError(ParseError::Kind::Syntax, 0,
                             "expected " + std::to_string(z->k) + " entries in '" + std::string(t) + "'");
        }
        return v;
    }
    if (const auto* zm = std::get_if<ZMod>(&f)) {
        auto r = parse_number<std::int64_t>(t, "residue");
        r %= zm->m;
        if (r < 0) r += zm->m;
        return r;
    }
    const auto& fr = std::get<Free>(f);
    FreeWord w;
    if (t == "1") return w;
    std::istringstream in{std::string(t)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'G')) {
            throw ParseError(ParseError::Kind::Syntax, 0, "bad generator '" + tok + "'");
        }
        auto i = parse_number<std::size_t>(std::string_view(tok).substr(1), "generator index");
        if (i == 0 || i > fr.rank) throw ParseError(ParseError::Kind::Syntax, 0, "generator out of range '" + tok + "'");
        append_reduced(w, tok[0] == 'g' ? static_cast<int>(i) : -static_cast<int>(i));
    }
    if (w.empty() && trim(t).empty()) throw ParseError(ParseError::Kind::Syntax, 0, "empty free-group literal");
    return w;
}

std::string render_component(const Component& c) {
    std::ostringstream out;
    if (const auto* v = std::get_if<std::vector<Int>>(&c)) {
        out << '[';
        for (std::size_t i = 0; i < v->size(); ++i) out << (i ? "," : "") << (*v)[i];
        out << ']';
    } else if (const auto* r = std::get_if<std::int64_t>(&c)) {
        out << *r;
    } else {
        const auto& w = std::get<FreeWord>(c);
        if (w.empty()) return "1";
        for (std::size_t i = 0; i < w.size(); ++i) {
            out << (i ? " " : "") << (w[i] > 0 ? 'g' : 'G') << std::abs(w[i]);
        }
    }
    return out.str();
}

} // namespace

GroupSpec parse_spec(std::string_view text) {
    GroupSpec s;
    std::string_view rest = trim(text);
    // factors are separated by " x "
    while (true) {
        auto pos = rest.find(" x ");
        s.factors.push_back(parse_factor(rest.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        rest = rest.substr(pos + 3);
    }
    return s;
}

std::string render_spec(const GroupSpec& s) {
    std::string out;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += " x ";
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, Zk>) out += "Z^" + std::to_string(f.k);
                else if constexpr (std::is_same_v<T, ZMod>) out += "Zmod " + std::to_string(f.m);
                else out += "F " + std::to_string(f.rank);
            },
            s.factors[i]);
    }
    return out;
}

Element::Element(std::shared_ptr<const GroupSpec> spec, std::vector<Component> parts)
    : spec_(std::move(spec)), parts_(std::move(parts)) {}

std::size_t Element::norm() const {
    std::size_t n = 0;
    for (const auto& c : parts_) {
        if (const auto* v = std::get_if<std::vector<Int>>(&c)) {
            for (const auto& x : *v) n += static_cast<std::size_t>(abs(x));
        } else if (const auto* w = std::get_if<FreeWord>(&c)) {
            n += w->size();
        }
    }
    return n;
}

bool Element::operator==(const Element& o) const {
    if (spec_ != o.spec_ && !(spec_ && o.spec_ && *spec_ == *o.spec_)) return false;
    return parts_ == o.parts_;
}

std::size_t Element::hash() const {
    std::size_t h = parts_.size();
    for (const auto& c : parts_) {
        h = mix(h, c.index());
        if (const auto* v = std::get_if<std::vector<Int>>(&c)) {
            for (const auto& x : *v) h = mix(h, boost::multiprecision::hash_value(x));
        } else if (const auto* r = std::get_if<std::int64_t>(&c)) {
            h = mix(h, static_cast<std::size_t>(*r));
        } else {
            for (int g : std::get<FreeWord>(c)) h = mix(h, static_cast<std::size_t>(g));
        }
    }
    return h;
}

Element identity(const std::shared_ptr<const GroupSpec>& s) {
    std::vector<Component> parts;
    for (const auto& f : s->factors) parts.push_back(identity_component(f));
    return Element(s, std::move(parts));
}

Element identity(const GroupSpec& s) {
    return identity(std::make_shared<const GroupSpec>(s));
}

Element mul(const Element& a, const Element& b) {
    if (!(a.spec_ptr() == b.spec_ptr() || a.spec() == b.spec())) {
        throw SpecMismatch("cannot multiply elements of " + render_spec(a.spec()) + " and " + render_spec(b.spec()));
    }
    std::vector<Component> parts;
    parts.reserve(a.parts().size());
    for (std::size_t i = 0; i < a.parts().size(); ++i) {
        const auto& f = a.spec().factors[i];
        const auto& x = a.parts()[i];
        const auto& y = b.parts()[i];
        if (const auto* zm = std::get_if<ZMod>(&f)) {
            parts.emplace_back((std::get<std::int64_t>(x) + std::get<std::int64_t>(y)) % zm->m);
        } else if (std::holds_alternative<Zk>(f)) {
            auto v = std::get<std::vector<Int>>(x);
            const auto& u = std::get<std::vector<Int>>(y);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += u[j];
            parts.emplace_back(std::move(v));
        } else {
            FreeWord w = std::get<FreeWord>(x);
            for (int g : std::get<FreeWord>(y)) append_reduced(w, g);
            parts.emplace_back(std::move(w));
        }
    }
    return Element(a.spec_ptr(), std::move(parts));
}

Element inv(const Element& a) {
    std::vector<Component> parts;
    for (std::size_t i = 0; i < a.parts().size(); ++i) {
        const auto& f = a.spec().factors[i];
        const auto& x = a.parts()[i];
        if (const auto* zm = std::get_if<ZMod>(&f)) {
            parts.emplace_back((zm->m - std::get<std::int64_t>(x)) % zm->m);
        } else if (std::holds_alternative<Zk>(f)) {
            auto v = std::get<std::vector<Int>>(x);
            for (auto& e : v) e = -e;
            parts.emplace_back(std::move(v));
        } else {
            FreeWord w(std::get<FreeWord>(x).rbegin(), std::get<FreeWord>(x).rend());
            for (int& g : w) g = -g;
            parts.emplace_back(std::move(w));
        }
    }
    return Element(a.spec_ptr(), std::move(parts));
}

bool is_identity(const Element& a) {
    for (const auto& c : a.parts()) {
        if (const auto* v = std::get_if<std::vector<Int>>(&c)) {
            if (std::any_of(v->begin(), v->end(), [](const Int& x) { return x != 0; })) return false;
        } else if (const auto* r = std::get_if<std::int64_t>(&c)) {
            if (*r != 0) return false;
        } else if (!std::get<FreeWord>(c).empty()) {
            return false;
        }
    }
    return true;
}

Element parse_element(const std::shared_ptr<const GroupSpec>& s, std::string_view text) {
    text = trim(text);
    std::vector<Component> parts;
    if (!s->is_product()) {
        parts.push_back(parse_component(s->factors[0], text));
        return Element(s, std::move(parts));
    }
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw ParseError(ParseError::Kind::Syntax, 0, "product element must be '( e1 ; e2 ; ... )'");
    }
    auto items = split_top(text.substr(1, text.size() - 2), ';');
    if (items.size() != s->factors.size()) {
        throw ParseError(ParseError::Kind::Syntax, 0,
                         "expected " + std::to_string(s->factors.size()) + " components in '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < items.size(); ++i) parts.push_back(parse_component(s->factors[i], items[i]));
    return Element(s, std::move(parts));
}

Element parse_element(const GroupSpec& s, std::string_view text) {
    return parse_element(std::make_shared<const GroupSpec>(s), text);
}

std::string render_element(const Element& a) {
    if (!a.spec().is_product()) return render_component(a.parts()[0]);
    std::string out = "( ";
    for (std::size_t i = 0; i < a.parts().size(); ++i) {
        if (i) out += " ; ";
        out += render_component(a.parts()[i]);
    }
    return out + " )";
}

} // namespace nonreg::group
