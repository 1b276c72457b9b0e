// SPDX-License-Identifier: Apache-2.0
#include <arcspace/parse.hpp>

#include <cctype>
#include <set>

namespace arcspace
{

namespace
{

enum class Tok { Int, Name, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l0 = line;
        const int c0 = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), l0, c0});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Name, std::string(s.substr(i, j - i)), l0, c0});
            advance(j - i);
            continue;
        }
        if (std::string_view("+-*/^(),;={}").find(c) != std::string_view::npos) {
            out.push_back({Tok::Sym, std::string(1, c), l0, c0});
            advance(1);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser
{
public:
    Parser(const std::vector<Token> &toks, std::size_t begin, std::size_t end) : t_(toks), pos_(begin), end_(end) {}

    const Token &peek() const
    {
        return pos_ < end_ ? t_[pos_] : t_[end_];
    }
    bool at_end() const
    {
        return pos_ >= end_;
    }
    bool is_sym(char c) const
    {
        return !at_end() && peek().kind == Tok::Sym && peek().text[0] == c;
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        const Token &tk = peek();
        const std::string found = at_end() ? (tk.kind == Tok::End ? "end of input" : "'" + tk.text + "'")
                                           : "'" + tk.text + "'";
        throw ParseError(msg + ", found " + found, tk.line, tk.col);
    }
    void expect_sym(char c)
    {
        if (!is_sym(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    void expect_end()
    {
        if (!at_end()) {
            fail("unexpected trailing input");
        }
    }
    int integer()
    {
        if (at_end() || peek().kind != Tok::Int) {
            fail("expected an integer");
        }
        const std::string &s = peek().text;
        if (s.size() > 9) {
            fail("integer too large");
        }
        ++pos_;
        return std::stoi(s);
    }
    std::string name()
    {
        if (at_end() || peek().kind != Tok::Name) {
            fail("expected a name");
        }
        return t_[pos_++].text;
    }

    // Sets big_o to k when a term O(t^k) is read (only when allowed).
    Polynomial expr(const std::vector<std::string> &names, std::optional<int> *big_o = nullptr)
    {
        names_ = &names;
        big_o_ = big_o;
        return sum();
    }

private:
    Polynomial sum()
    {
        Polynomial acc(names_->size());
        bool neg = false;
        if (is_sym('+') || is_sym('-')) {
            neg = peek().text[0] == '-';
            ++pos_;
        }
        acc = neg ? -product() : product();
        while (is_sym('+') || is_sym('-')) {
            const bool minus = peek().text[0] == '-';
            ++pos_;
            const Polynomial rhs = product();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }
    Polynomial product()
    {
        Polynomial acc = power();
        while (is_sym('*') || is_sym('/')) {
            const bool div = peek().text[0] == '/';
            const Token at = peek();
            ++pos_;
            const Polynomial rhs = power();
            if (div) {
                if (!rhs.is_constant() || rhs.is_zero()) {
                    throw ParseError(rhs.is_zero() ? "division by zero" : "division by a non-constant expression",
                                     at.line, at.col);
                }
                acc *= Rational(1) / rhs.constant_term();
            } else {
                acc *= rhs;
            }
        }
        return acc;
    }
    Polynomial power()
    {
        Polynomial base = primary();
        if (is_sym('^')) {
            ++pos_;
            const int e = integer();
            if (e > 10000) {
                fail("exponent too large");
            }
            Polynomial r = Polynomial::constant(names_->size(), Rational(1));
            for (int i = 0; i < e; ++i) {
                r *= base;
            }
            return r;
        }
        return base;
    }
    Polynomial primary()
    {
        const std::size_t nv = names_->size();
        if (at_end()) {
            fail("expected a term");
        }
        const Token &tk = peek();
        if (tk.kind == Tok::Int) {
            ++pos_;
            return Polynomial::constant(nv, Rational(tk.text));
        }
        if (tk.kind == Tok::Name) {
            if (tk.text == "O" && big_o_ != nullptr) {
                ++pos_;
                expect_sym('(');
                if (name() != "t") {
                    --pos_;
                    fail("expected t inside O(...)");
                }
                expect_sym('^');
                const int k = integer();
                expect_sym(')');
                if (k < 1) {
                    fail("O(t^k) needs k >= 1");
                }
                *big_o_ = big_o_->has_value() ? std::min(**big_o_, k) : k;
                return Polynomial(nv);
            }
            for (std::size_t i = 0; i < nv; ++i) {
                if ((*names_)[i] == tk.text) {
                    ++pos_;
                    return Polynomial::variable(nv, i);
                }
            }
            std::string known;
            for (const auto &n : *names_) {
                known += (known.empty() ? "" : ", ") + n;
            }
            throw ParseError("unknown identifier '" + tk.text + "' (known: " + known + ")", tk.line, tk.col);
        }
        if (is_sym('(')) {
            ++pos_;
            Polynomial p = sum();
            expect_sym(')');
            return p;
        }
        if (is_sym('-')) {
            ++pos_;
            return -power();
        }
        fail("expected a term");
    }

    const std::vector<Token> &t_;
    std::size_t pos_;
    std::size_t end_;
    const std::vector<std::string> *names_ = nullptr;
    std::optional<int> *big_o_ = nullptr;
};

Polynomial parse_whole(std::string_view text, const std::vector<std::string> &names, std::optional<int> *big_o)
{
    const std::vector<Token> toks = tokenize(text);
    Parser p(toks, 0, toks.size() - 1);
    Polynomial out = p.expr(names, big_o);
    p.expect_end();
    return out;
}

std::vector<std::string> t_names()
{
    return {"t"};
}

std::vector<std::string> ts_names(int p)
{
    std::vector<std::string> v{"t"};
    for (int i = 1; i <= p; ++i) {
        v.push_back("s" + std::to_string(i));
    }
    return v;
}

std::vector<Polynomial> vector_value(Parser &p)
{
    p.expect_sym('(');
    std::vector<Polynomial> out;
    const auto names = t_names();
    out.push_back(p.expr(names));
    while (p.is_sym(',')) {
        p.expect_sym(',');
        out.push_back(p.expr(names));
    }
    p.expect_sym(')');
    return out;
}

std::string join_poly_vec(const std::vector<Polynomial> &v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].str(t_names(), TermOrder::LastVariableLargest);
    }
    return out + ")";
}

const std::set<std::string> &vector_keys()
{
    static const std::set<std::string> keys{"y", "ybar", "z", "a2"};
    return keys;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string> &names)
{
    return parse_whole(text, names, nullptr);
}

PolyTY parse_poly(std::string_view text, std::size_t m)
{
    return parse_polynomial(text, ty_names(m));
}

TruncatedSeries series_from_poly(const Polynomial &p, int N)
{
    if (p.nvars() != 1) {
        throw ArityMismatch("series literal must be a polynomial in t alone");
    }
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
    for (const auto &[mono, coef] : p.terms()) {
        if (mono[0] <= N) {
            c[static_cast<std::size_t>(mono[0])] = coef;
        }
    }
    return TruncatedSeries(std::move(c), N);
}

NilSeries nil_series_from_poly(const Polynomial &p, const NilRing &ring, int N)
{
    if (p.nvars() != static_cast<std::size_t>(ring.p) + 1) {
        throw ArityMismatch("deformation literal must be a polynomial in t, s1..s" + std::to_string(ring.p));
    }
    std::vector<Polynomial> c(static_cast<std::size_t>(N) + 1, Polynomial(static_cast<std::size_t>(ring.p)));
    for (const auto &[mono, coef] : p.terms()) {
        if (mono[0] > N) {
            continue;
        }
        Monomial s(mono.begin() + 1, mono.end());
        c[static_cast<std::size_t>(mono[0])].add_term(s, coef);
    }
    std::vector<NilElement> e;
    for (auto &q : c) {
        e.emplace_back(ring, std::move(q));
    }
    return NilSeries(std::move(e), N);
}

TruncatedSeries parse_series(std::string_view text, int N)
{
    std::optional<int> big_o;
    const Polynomial p = parse_whole(text, t_names(), &big_o);
    const int n = big_o ? std::min(N, *big_o - 1) : N;
    return series_from_poly(p, n);
}

TruncatedVec parse_series_vec(std::string_view text, int N)
{
    const std::vector<Token> toks = tokenize(text);
    Parser p(toks, 0, toks.size() - 1);
    const std::vector<Polynomial> v = vector_value(p);
    p.expect_end();
    TruncatedVec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        TruncatedSeries s = series_from_poly(v[i], N);
        if (!s[0].is_zero()) {
            throw InvalidArgument("component " + std::to_string(i + 1) + " of an arc has a nonzero constant term");
        }
        out.push_back(s.with_zero_constant());
    }
    return out;
}

NilSeries parse_nil_series(std::string_view text, const NilRing &ring, int N)
{
    return nil_series_from_poly(parse_polynomial(text, ts_names(ring.p)), ring, N);
}

NilRing SystemFile::nil_ring() const
{
    return NilRing(params.value_or(0), nilorder.value_or(1));
}

TruncatedVec SystemFile::vector(const std::string &name, int n) const
{
    const auto it = vectors.find(name);
    if (it == vectors.end()) {
        throw InvalidArgument("no vector '" + name + "' in the system file");
    }
    TruncatedVec out;
    for (const auto &p : it->second) {
        TruncatedSeries s = series_from_poly(p, n);
        if (!s[0].is_zero()) {
            throw InvalidArgument("vector '" + name + "' has a component with nonzero constant term");
        }
        out.push_back(s.with_zero_constant());
    }
    return out;
}

NilVec SystemFile::deform_template(int n) const
{
    const NilRing ring = nil_ring();
    NilVec out;
    for (std::size_t i = 1; i <= system.m; ++i) {
        const auto it = deform.find(static_cast<int>(i));
        const Polynomial p = it == deform.end() ? Polynomial(static_cast<std::size_t>(ring.p) + 1) : it->second;
        NilSeries s = nil_series_from_poly(p, ring, n);
        if (!s[0].is_zero()) {
            throw InvalidArgument("deformed component y" + std::to_string(i) + " has a nonzero constant term");
        }
        out.push_back(s.with_zero_constant());
    }
    return out;
}

std::string SystemFile::str() const
{
    std::string out = "m=" + std::to_string(system.m) + ";\n";
    for (std::size_t i = 0; i < system.f.size(); ++i) {
        out += "f" + std::to_string(i + 1) + " = "
               + system.f[i].str(ty_names(system.m), TermOrder::LastVariableLargest) + ";\n";
    }
    if (minor) {
        out += "minor = {";
        for (std::size_t i = 0; i < minor->size(); ++i) {
            out += (i ? "," : "") + std::to_string((*minor)[i]);
        }
        out += "};\n";
    }
    if (N) {
        out += "N = " + std::to_string(*N) + ";\n";
    }
    if (d) {
        out += "d = " + std::to_string(*d) + ";\n";
    }
    if (gauge) {
        out += "gauge = " + *gauge + ";\n";
    }
    for (const auto &[name, v] : vectors) {
        out += name + " = " + join_poly_vec(v) + ";\n";
    }
    if (params) {
        out += "params = " + std::to_string(*params) + ";\n";
    }
    if (nilorder) {
        out += "nilorder = " + std::to_string(*nilorder) + ";\n";
    }
    const auto names = ts_names(params.value_or(0));
    for (const auto &[i, p] : deform) {
        out += "deform y" + std::to_string(i) + " = " + p.str(names, TermOrder::LastVariableLargest) + ";\n";
    }
    if (gval) {
        out += "gval = " + gval->str(names, TermOrder::LastVariableLargest) + ";\n";
    }
    if (F) {
        out += "F = " + F->str(names, TermOrder::LastVariableLargest) + ";\n";
    }
    if (D) {
        out += "D = " + std::to_string(*D) + ";\n";
    }
    return out;
}

SystemFile parse_system(std::string_view text)
{
    const std::vector<Token> toks = tokenize(text);

    struct Stmt {
        std::string key;
        std::size_t key_tok;
        std::size_t begin;
        std::size_t end;
    };
    std::vector<Stmt> stmts;
    std::set<std::string> seen;
    std::size_t i = 0;
    while (toks[i].kind != Tok::End) {
        if (toks[i].kind == Tok::Sym && toks[i].text == ";") {
            ++i;
            continue;
        }
        Parser head(toks, i, toks.size() - 1);
        std::string key = head.name();
        std::size_t j = i + 1;
        if (key == "deform") {
            Parser sub(toks, j, toks.size() - 1);
            key += " " + sub.name();
            ++j;
        }
        Parser eq(toks, j, toks.size() - 1);
        eq.expect_sym('=');
        ++j;
        std::size_t k = j;
        int depth = 0;
        while (toks[k].kind != Tok::End && !(depth == 0 && toks[k].kind == Tok::Sym && toks[k].text == ";")) {
            if (toks[k].kind == Tok::Sym && (toks[k].text == "(" || toks[k].text == "{")) {
                ++depth;
            } else if (toks[k].kind == Tok::Sym && (toks[k].text == ")" || toks[k].text == "}")) {
                --depth;
            }
            ++k;
        }
        if (!seen.insert(key).second) {
            throw ParseError("duplicate statement '" + key + "'", toks[i].line, toks[i].col);
        }
        stmts.push_back({key, i, j, k});
        i = k;
    }

    auto find = [&](const std::string &key) -> const Stmt * {
        for (const auto &s : stmts) {
            if (s.key == key) {
                return &s;
            }
        }
        return nullptr;
    };
    auto int_value = [&](const Stmt &s) {
        Parser p(toks, s.begin, s.end);
        const int v = p.integer();
        p.expect_end();
        return v;
    };

    SystemFile out;
    const Stmt *ms = find("m");
    if (ms == nullptr) {
        const Token &tk = toks.front();
        throw ParseError("missing 'm = <variables>' statement", tk.line, tk.col);
    }
    const int m = int_value(*ms);
    if (m < 1) {
        throw ParseError("m must be at least 1", toks[ms->begin].line, toks[ms->begin].col);
    }
    if (const Stmt *s = find("params")) {
        out.params = int_value(*s);
    }
    if (const Stmt *s = find("nilorder")) {
        out.nilorder = int_value(*s);
        if (*out.nilorder < 1) {
            throw ParseError("nilorder must be at least 1", toks[s->begin].line, toks[s->begin].col);
        }
    }
    const auto tsn = ts_names(out.params.value_or(0));
    const auto tyn = ty_names(static_cast<std::size_t>(m));

    std::map<int, Polynomial> eqs;
    for (const auto &s : stmts) {
        Parser p(toks, s.begin, s.end);
        const Token &kt = toks[s.key_tok];
        if (s.key == "m" || s.key == "params" || s.key == "nilorder") {
            continue;
        }
        if (s.key.size() > 1 && s.key[0] == 'f' && std::all_of(s.key.begin() + 1, s.key.end(), ::isdigit)) {
            const int idx = std::stoi(s.key.substr(1));
            if (idx < 1) {
                throw ParseError("equations are numbered from f1", kt.line, kt.col);
            }
            eqs[idx] = p.expr(tyn);
        } else if (s.key == "minor") {
            const bool braced = p.is_sym('{');
            if (braced) {
                p.expect_sym('{');
            }
            std::vector<int> cols{p.integer()};
            while (p.is_sym(',')) {
                p.expect_sym(',');
                cols.push_back(p.integer());
            }
            if (braced) {
                p.expect_sym('}');
            }
            out.minor = cols;
        } else if (s.key == "N") {
            out.N = p.integer();
        } else if (s.key == "d") {
            out.d = p.integer();
        } else if (s.key == "D") {
            out.D = p.integer();
        } else if (s.key == "gauge") {
            const std::string g = p.name();
            if (g != "minor" && g != "monomial") {
                throw ParseError("gauge must be 'minor' or 'monomial'", toks[s.begin].line, toks[s.begin].col);
            }
            out.gauge = g;
        } else if (vector_keys().count(s.key) != 0) {
            out.vectors[s.key] = vector_value(p);
        } else if (s.key.rfind("deform ", 0) == 0) {
            const std::string var = s.key.substr(7);
            int idx = 0;
            for (int c = 1; c <= m; ++c) {
                if (var == "y" + std::to_string(c)) {
                    idx = c;
                }
            }
            if (idx == 0) {
                throw ParseError("deform needs a variable y1..y" + std::to_string(m) + ", got '" + var + "'",
                                 toks[s.key_tok + 1].line, toks[s.key_tok + 1].col);
            }
            out.deform[idx] = p.expr(tsn);
        } else if (s.key == "gval") {
            out.gval = p.expr(tsn);
        } else if (s.key == "F") {
            out.F = p.expr(tsn);
        } else {
            throw ParseError("unknown statement '" + s.key + "'", kt.line, kt.col);
        }
        p.expect_end();
    }
    std::vector<PolyTY> f;
    for (const auto &[idx, poly] : eqs) {
        if (idx != static_cast<int>(f.size()) + 1) {
            const Stmt *s = find("f" + std::to_string(idx));
            throw ParseError("equation f" + std::to_string(f.size() + 1) + " is missing", toks[s->key_tok].line,
                             toks[s->key_tok].col);
        }
        f.push_back(poly);
    }
    out.system = PolySystem(static_cast<std::size_t>(m), std::move(f));
    return out;
}

} // namespace arcspace
