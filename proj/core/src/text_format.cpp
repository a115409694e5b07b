#include <zsuper/text_format.hpp>

#include <cctype>
#include <optional>
#include <set>

#include <zsuper/errors.hpp>

namespace zsuper::text
{

namespace
{

enum class tok { ident, number, symbol, newline, end };

struct token {
    tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<token> lex(std::string_view src)
{
    std::vector<token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            out.push_back({tok::newline, "\\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            advance(1);
            continue;
        }
        const auto start = i;
        const auto start_col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) {
                advance(1);
            }
            while (i < src.size() && src[i] == '\'') {
                advance(1);
            }
            out.push_back({tok::ident, std::string(src.substr(start, i - start)), line, start_col});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])) != 0) {
                advance(1);
            }
            out.push_back({tok::number, std::string(src.substr(start, i - start)), line, start_col});
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            advance(2);
            out.push_back({tok::symbol, "->", line, start_col});
            continue;
        }
        if (std::string_view("(){}[],;:=+-*/^").find(c) != std::string_view::npos) {
            advance(1);
            out.push_back({tok::symbol, std::string(1, c), line, start_col});
            continue;
        }
        throw syntax_error(line, col, std::string(1, c), "unexpected character");
    }
    out.push_back({tok::end, "<end>", line, col});
    return out;
}

struct header {
    document_kind kind;
    std::string name;
    unsigned arity = 0;
    sign_rule rule = sign_rule::scalar_product;
    std::optional<unsigned> order;
};

class parser
{
public:
    explicit parser(std::string_view src) : m_toks(lex(src)) {}

    const token &peek() const
    {
        return m_toks[m_pos];
    }

    token next()
    {
        auto t = m_toks[m_pos];
        if (t.kind != tok::end) {
            ++m_pos;
        }
        return t;
    }

    [[noreturn]] void fail(const token &t, const std::string &msg) const
    {
        throw syntax_error(t.line, t.column, t.text, msg);
    }

    bool at_symbol(std::string_view s) const
    {
        return peek().kind == tok::symbol && peek().text == s;
    }

    bool accept_symbol(std::string_view s)
    {
        if (at_symbol(s)) {
            next();
            return true;
        }
        return false;
    }

    void expect_symbol(std::string_view s)
    {
        if (!accept_symbol(s)) {
            fail(peek(), "expected '" + std::string(s) + "'");
        }
    }

    token expect_ident(const std::string &what)
    {
        if (peek().kind != tok::ident) {
            fail(peek(), "expected " + what);
        }
        return next();
    }

    unsigned expect_number(const std::string &what)
    {
        if (peek().kind != tok::number) {
            fail(peek(), "expected " + what);
        }
        const auto t = next();
        try {
            return static_cast<unsigned>(std::stoul(t.text));
        } catch (const std::exception &) {
            fail(t, "number out of range");
        }
    }

    void skip_separators()
    {
        while (peek().kind == tok::newline || at_symbol(";")) {
            next();
        }
    }

    void skip_newlines()
    {
        while (peek().kind == tok::newline) {
            next();
        }
    }

    void end_statement()
    {
        if (peek().kind == tok::newline || peek().kind == tok::end || at_symbol(";")) {
            if (peek().kind != tok::end) {
                next();
            }
            return;
        }
        fail(peek(), "expected end of statement");
    }

    header read_header()
    {
        skip_separators();
        const auto kw = expect_ident("a document header");
        header h;
        if (kw.text == "atlas") {
            h.kind = document_kind::atlas;
        } else if (kw.text == "bundle") {
            h.kind = document_kind::bundle;
        } else if (kw.text == "morphism") {
            h.kind = document_kind::morphism;
        } else if (kw.text == "series") {
            h.kind = document_kind::series;
        } else if (kw.text == "splitting") {
            h.kind = document_kind::splitting;
        } else {
            fail(kw, "unknown document kind");
        }
        h.name = expect_ident("a document name").text;
        bool have_n = false;
        while (peek().kind == tok::ident) {
            const auto key = next();
            expect_symbol("=");
            if (key.text == "n") {
                h.arity = expect_number("the arity n");
                have_n = true;
            } else if (key.text == "convention") {
                const auto v = expect_ident("a convention");
                try {
                    h.rule = parse_sign_rule(v.text);
                } catch (const error &) {
                    fail(v, "unknown convention (expected zsp, parity or comm)");
                }
            } else if (key.text == "k" && h.kind == document_kind::splitting) {
                h.order = expect_number("the order k");
            } else {
                fail(key, "unknown header key");
            }
        }
        if (!have_n) {
            fail(peek(), "header needs n=<arity>");
        }
        if (h.arity == 0u || h.arity > 16u) {
            throw arity_mismatch("arity n must be between 1 and 16");
        }
        if (h.kind == document_kind::splitting && !h.order) {
            fail(peek(), "splitting header needs k=<order>");
        }
        end_statement();
        return h;
    }

    degree read_degree(unsigned arity)
    {
        const auto open = peek();
        expect_symbol("(");
        std::vector<bool> bits;
        do {
            const auto t = peek();
            const auto b = expect_number("a degree digit");
            if (b > 1u) {
                fail(t, "degree digits are 0 or 1");
            }
            bits.push_back(b == 1u);
        } while (accept_symbol(","));
        expect_symbol(")");
        if (bits.size() != arity) {
            throw arity_mismatch("degree at line " + std::to_string(open.line) + " has " + std::to_string(bits.size())
                                 + " digits, expected " + std::to_string(arity));
        }
        std::uint32_t word = 0;
        for (bool b : bits) {
            word = (word << 1u) | (b ? 1u : 0u);
        }
        return degree(arity, word);
    }

    // `vars` statements, then the table.
    table_ptr read_vars(const header &h)
    {
        std::vector<std::string> base;
        std::vector<formal_variable> formal;
        std::set<std::string> seen;
        skip_separators();
        while (peek().kind == tok::ident && peek().text == "vars") {
            next();
            do {
                skip_newlines();
                const auto name = expect_ident("a variable name");
                if (name.text.back() == '\'') {
                    fail(name, "variable names cannot end in a prime");
                }
                if (!seen.insert(name.text).second) {
                    fail(name, "variable declared twice");
                }
                expect_symbol(":");
                const auto d = read_degree(h.arity);
                if (d.is_zero()) {
                    base.push_back(name.text);
                } else {
                    formal.push_back({name.text, d});
                }
            } while (accept_symbol(","));
            end_statement();
            skip_separators();
        }
        return make_table(h.arity, std::move(base), std::move(formal), h.rule);
    }

    // expr := [+|-] term {(+|-) term}
    graded_series expression(const table_ptr &table, cap_t cap)
    {
        graded_series out(table, cap);
        bool negate = false;
        if (accept_symbol("-")) {
            negate = true;
        } else {
            accept_symbol("+");
        }
        for (;;) {
            auto t = term(table, cap);
            if (negate) {
                out -= t;
            } else {
                out += t;
            }
            if (accept_symbol("+")) {
                negate = false;
            } else if (accept_symbol("-")) {
                negate = true;
            } else {
                break;
            }
        }
        return out;
    }

    graded_series term(const table_ptr &table, cap_t cap)
    {
        auto out = factor(table, cap);
        for (;;) {
            if (accept_symbol("*")) {
                out = out * factor(table, cap);
            } else if (peek().kind == tok::ident || peek().kind == tok::number || at_symbol("(")) {
                out = out * factor(table, cap);
            } else {
                break;
            }
        }
        return out;
    }

    graded_series factor(const table_ptr &table, cap_t cap)
    {
        auto out = primary(table, cap);
        if (accept_symbol("^")) {
            out = out.pow(expect_number("an exponent"));
        }
        return out;
    }

    graded_series primary(const table_ptr &table, cap_t cap)
    {
        const auto t = peek();
        if (t.kind == tok::number) {
            next();
            rational value(t.text);
            if (accept_symbol("/")) {
                const auto den = peek();
                const auto d = expect_number("a denominator");
                if (d == 0u) {
                    fail(den, "zero denominator");
                }
                value /= rational(static_cast<unsigned long>(d));
            }
            value.canonicalize();
            return graded_series::constant(table, value, cap);
        }
        if (t.kind == tok::ident) {
            next();
            const auto ref = table->find(t.text);
            if (!ref) {
                fail(t, "unknown variable");
            }
            if (ref->which == coordinate_ref::kind::base) {
                return graded_series::base_variable(table, ref->index, cap);
            }
            return graded_series::generator(table, ref->index, cap);
        }
        if (accept_symbol("(")) {
            skip_newlines();
            auto out = expression(table, cap);
            skip_newlines();
            expect_symbol(")");
            return out;
        }
        fail(t, "expected an expression");
    }

    // `{ y' = expr; ... }`: images of all coordinates of `table`, identity
    // where omitted. `on_other` handles statements that are not assignments
    // (returns false to reject).
    template <typename Other>
    std::vector<graded_series> assignment_block(const table_ptr &table, cap_t cap, Other &&on_other)
    {
        std::vector<std::optional<graded_series>> images(table->coordinate_count());
        expect_symbol("{");
        for (;;) {
            skip_separators();
            if (accept_symbol("}")) {
                break;
            }
            const auto lhs = expect_ident("an assignment");
            if (lhs.text.back() != '\'') {
                if (!on_other(lhs)) {
                    fail(lhs, "expected a primed coordinate");
                }
                continue;
            }
            const auto ref = table->find(lhs.text.substr(0, lhs.text.size() - 1));
            if (!ref) {
                fail(lhs, "unknown coordinate");
            }
            const auto slot = ref->which == coordinate_ref::kind::base ? ref->index : table->base_count() + ref->index;
            if (images[slot]) {
                fail(lhs, "coordinate assigned twice");
            }
            expect_symbol("=");
            images[slot] = expression(table, cap);
            if (!at_symbol("}")) {
                end_statement();
            }
        }
        std::vector<graded_series> out;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i]) {
                out.push_back(std::move(*images[i]));
            } else if (i < table->base_count()) {
                out.push_back(graded_series::base_variable(table, i, cap));
            } else {
                out.push_back(graded_series::generator(table, i - table->base_count(), cap));
            }
        }
        return out;
    }

    std::vector<graded_series> assignment_block(const table_ptr &table, cap_t cap)
    {
        return assignment_block(table, cap, [](const token &) { return false; });
    }

    base_polynomial base_expression(const table_ptr &table)
    {
        const auto t = peek();
        const auto s = expression(table, std::nullopt);
        for (const auto &[mu, c] : s.terms()) {
            if (mu.order() != 0u) {
                throw grading_violation("line " + std::to_string(t.line) + ": expression must not contain formal "
                                        + "generators here: " + s.to_string());
            }
        }
        return s.epsilon();
    }

    // Chart statements shared by atlases and bundles. Returns false if the
    // current statement is not one of them.
    bool chart_statement(std::vector<chart_id> &charts, std::vector<chart_pair> &overlaps,
                         std::vector<chart_triple> &triples)
    {
        const auto &kw = peek();
        if (kw.kind != tok::ident) {
            return false;
        }
        if (kw.text == "chart") {
            next();
            do {
                charts.push_back(expect_ident("a chart id").text);
            } while (peek().kind == tok::ident);
        } else if (kw.text == "overlap") {
            next();
            auto a = expect_ident("a chart id").text;
            auto b = expect_ident("a chart id").text;
            overlaps.emplace_back(std::move(a), std::move(b));
        } else if (kw.text == "triple") {
            next();
            chart_triple t;
            for (auto &c : t) {
                c = expect_ident("a chart id").text;
            }
            triples.push_back(std::move(t));
        } else {
            return false;
        }
        end_statement();
        return true;
    }

    chart_pair transition_head()
    {
        next();
        auto a = expect_ident("a chart id").text;
        expect_symbol("->");
        auto b = expect_ident("a chart id").text;
        return {std::move(a), std::move(b)};
    }

    void require_kind(const header &h, document_kind k)
    {
        if (h.kind != k) {
            fail(m_toks.front(), "document has the wrong kind");
        }
    }

private:
    std::vector<token> m_toks;
    std::size_t m_pos = 0;
};

std::string kind_word(document_kind k)
{
    switch (k) {
    case document_kind::atlas:
        return "atlas";
    case document_kind::bundle:
        return "bundle";
    case document_kind::morphism:
        return "morphism";
    case document_kind::series:
        return "series";
    case document_kind::splitting:
        return "splitting";
    }
    return "atlas";
}

std::string header_text(document_kind k, const std::string &name, const variable_table &t,
                         std::optional<unsigned> order = std::nullopt)
{
    std::string out = kind_word(k) + " " + name + " n=" + std::to_string(t.arity()) + " convention="
                      + std::string(to_string(t.rule()));
    if (order) {
        out += " k=" + std::to_string(*order);
    }
    out += "\nvars ";
    bool first = true;
    auto add = [&](const std::string &n, const degree &d) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += n + " : " + d.to_string();
    };
    for (const auto &b : t.base_names()) {
        add(b, degree::zero(t.arity()));
    }
    for (const auto &f : t.formal()) {
        add(f.name, f.deg);
    }
    out += "\n";
    return out;
}

std::string coordinate_name(const variable_table &t, std::size_t i)
{
    return i < t.base_count() ? t.base_names()[i] : t.formal()[i - t.base_count()].name;
}

bool is_identity_image(const variable_table &t, const table_ptr &table, std::size_t i, const graded_series &s)
{
    if (i < t.base_count()) {
        return s == graded_series::base_variable(table, i);
    }
    return s == graded_series::generator(table, i - t.base_count());
}

void print_assignments(std::string &out, const table_ptr &table, const std::vector<graded_series> &images)
{
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!is_identity_image(*table, table, i, images[i])) {
            out += "  " + coordinate_name(*table, i) + "' = " + images[i].to_string() + "\n";
        }
    }
}

void print_charts(std::string &out, const std::vector<chart_id> &charts, const std::vector<chart_pair> &overlaps,
                  const std::vector<chart_triple> &triples)
{
    out += "chart";
    for (const auto &c : charts) {
        out += " " + c;
    }
    out += "\n";
    for (const auto &[a, b] : overlaps) {
        out += "overlap " + a + " " + b + "\n";
    }
    for (const auto &t : triples) {
        out += "triple " + t[0] + " " + t[1] + " " + t[2] + "\n";
    }
}

} // namespace

document_kind detect_kind(std::string_view text)
{
    parser p(text);
    return p.read_header().kind;
}

atlas_data parse_atlas_data(std::string_view text)
{
    parser p(text);
    const auto h = p.read_header();
    p.require_kind(h, document_kind::atlas);
    atlas_data out;
    out.name = h.name;
    out.table = p.read_vars(h);
    for (;;) {
        p.skip_separators();
        if (p.peek().kind == tok::end) {
            break;
        }
        if (p.chart_statement(out.charts, out.overlaps, out.triples)) {
            continue;
        }
        const auto kw = p.peek();
        if (kw.kind == tok::ident && kw.text == "transition") {
            auto key = p.transition_head();
            auto images = p.assignment_block(out.table, std::nullopt);
            if (!out.transitions.emplace(key, std::move(images)).second) {
                p.fail(kw, "transition declared twice");
            }
            continue;
        }
        p.fail(kw, "expected chart, overlap, triple or transition");
    }
    return out;
}

atlas parse_atlas(std::string_view text)
{
    return atlas(parse_atlas_data(text));
}

graded_bundle parse_bundle(std::string_view text)
{
    parser p(text);
    const auto h = p.read_header();
    p.require_kind(h, document_kind::bundle);
    graded_bundle out;
    out.name = h.name;
    out.table = p.read_vars(h);
    const auto &table = out.table;
    const auto p_count = table->base_count();
    for (;;) {
        p.skip_separators();
        if (p.peek().kind == tok::end) {
            break;
        }
        if (p.chart_statement(out.charts, out.overlaps, out.triples)) {
            continue;
        }
        const auto kw = p.peek();
        if (kw.kind != tok::ident || kw.text != "transition") {
            p.fail(kw, "expected chart, overlap, triple or transition");
        }
        auto key = p.transition_head();
        bundle_transition tr;
        auto on_block = [&](const token &t) {
            if (t.text != "block") {
                return false;
            }
            const auto d = p.read_degree(h.arity);
            const auto idx = table->sector(d);
            if (idx.empty()) {
                p.fail(t, "block for a sector without fiber coordinates");
            }
            if (tr.blocks.count(d) != 0u) {
                p.fail(t, "block declared twice");
            }
            poly_matrix m(idx.size(), idx.size(), p_count);
            p.skip_newlines();
            p.expect_symbol("[");
            std::size_t r = 0;
            std::size_t c = 0;
            for (;;) {
                p.skip_newlines();
                const auto at = p.peek();
                if (r >= idx.size() || c >= idx.size()) {
                    p.fail(at, "block has more entries than its sector rank");
                }
                m(r, c) = p.base_expression(table);
                p.skip_newlines();
                if (p.accept_symbol(",")) {
                    ++c;
                } else if (p.accept_symbol(";")) {
                    if (c + 1 != idx.size()) {
                        p.fail(at, "short block row");
                    }
                    ++r;
                    c = 0;
                } else {
                    const auto close = p.peek();
                    p.expect_symbol("]");
                    if (r + 1 != idx.size() || c + 1 != idx.size()) {
                        p.fail(close, "block must be " + std::to_string(idx.size()) + "x"
                                          + std::to_string(idx.size()));
                    }
                    break;
                }
            }
            tr.blocks.emplace(d, std::move(m));
            if (!p.at_symbol("}")) {
                p.end_statement();
            }
            return true;
        };
        const auto images = p.assignment_block(table, std::nullopt, on_block);
        for (std::size_t j = 0; j < p_count; ++j) {
            for (const auto &[mu, c] : images[j].terms()) {
                if (mu.order() != 0u) {
                    throw grading_violation("bundle base map of " + key.first + " -> " + key.second
                                            + " must not involve fiber coordinates");
                }
            }
            tr.base_map.push_back(images[j].epsilon());
        }
        for (std::size_t b = 0; b < table->formal_count(); ++b) {
            if (images[p_count + b] != graded_series::generator(table, b)) {
                p.fail(kw, "fiber coordinates of a bundle transition are given by blocks");
            }
        }
        if (!out.transitions.emplace(key, std::move(tr)).second) {
            p.fail(kw, "transition declared twice");
        }
    }
    validate_bundle(out);
    return out;
}

morphism_document parse_morphism(std::string_view text)
{
    parser p(text);
    const auto h = p.read_header();
    p.require_kind(h, document_kind::morphism);
    const auto table = p.read_vars(h);
    std::optional<std::vector<graded_series>> images;
    for (;;) {
        p.skip_separators();
        if (p.peek().kind == tok::end) {
            break;
        }
        const auto kw = p.peek();
        if (kw.kind == tok::ident && kw.text == "map" && !images) {
            p.next();
            images = p.assignment_block(table, std::nullopt);
            continue;
        }
        p.fail(kw, images ? "only one map per document" : "expected map");
    }
    if (!images) {
        p.fail(p.peek(), "morphism document without a map");
    }
    return {h.name, morphism(table, table, std::move(*images))};
}

series_document parse_series(std::string_view text)
{
    parser p(text);
    const auto h = p.read_header();
    p.require_kind(h, document_kind::series);
    const auto table = p.read_vars(h);
    std::optional<graded_series> value;
    for (;;) {
        p.skip_separators();
        if (p.peek().kind == tok::end) {
            break;
        }
        const auto kw = p.peek();
        if (kw.kind == tok::ident && kw.text == "value" && !value) {
            p.next();
            value = p.expression(table, std::nullopt);
            p.end_statement();
            continue;
        }
        p.fail(kw, value ? "only one value per document" : "expected value");
    }
    if (!value) {
        p.fail(p.peek(), "series document without a value");
    }
    return {h.name, std::move(*value)};
}

splitting_document parse_splitting(std::string_view text)
{
    parser p(text);
    const auto h = p.read_header();
    p.require_kind(h, document_kind::splitting);
    splitting_document out;
    out.name = h.name;
    out.table = p.read_vars(h);
    out.iso.order = *h.order;
    for (;;) {
        p.skip_separators();
        if (p.peek().kind == tok::end) {
            break;
        }
        const auto kw = p.peek();
        if (kw.kind != tok::ident || kw.text != "morphism") {
            p.fail(kw, "expected morphism");
        }
        p.next();
        const auto chart = p.expect_ident("a chart id").text;
        auto images = p.assignment_block(out.table, out.iso.order);
        if (!out.iso.maps.emplace(chart, morphism(out.table, out.table, std::move(images), out.iso.order)).second) {
            p.fail(kw, "chart morphism declared twice");
        }
    }
    return out;
}

document parse(std::string_view text)
{
    switch (detect_kind(text)) {
    case document_kind::atlas:
        return parse_atlas(text);
    case document_kind::bundle:
        return parse_bundle(text);
    case document_kind::morphism:
        return parse_morphism(text);
    case document_kind::series:
        return parse_series(text);
    case document_kind::splitting:
        return parse_splitting(text);
    }
    throw error("unreachable document kind");
}

graded_series parse_expression(std::string_view expr, const table_ptr &table, cap_t cap)
{
    parser p(expr);
    p.skip_newlines();
    auto out = p.expression(table, cap);
    p.skip_separators();
    if (p.peek().kind != tok::end) {
        p.fail(p.peek(), "trailing input after expression");
    }
    return out;
}

std::string print(const atlas_data &a)
{
    std::string out = header_text(document_kind::atlas, a.name, *a.table);
    print_charts(out, a.charts, a.overlaps, a.triples);
    for (const auto &[key, images] : a.transitions) {
        out += "transition " + key.first + " -> " + key.second + " {\n";
        print_assignments(out, a.table, images);
        out += "}\n";
    }
    return out;
}

std::string print(const atlas &a)
{
    return print(a.data());
}

std::string print(const graded_bundle &b)
{
    const auto &t = *b.table;
    std::string out = header_text(document_kind::bundle, b.name, t);
    print_charts(out, b.charts, b.overlaps, b.triples);
    const auto &names = t.base_names();
    for (const auto &[key, tr] : b.transitions) {
        out += "transition " + key.first + " -> " + key.second + " {\n";
        for (std::size_t j = 0; j < tr.base_map.size(); ++j) {
            if (tr.base_map[j] != base_polynomial::variable(t.base_count(), j)) {
                out += "  " + names[j] + "' = " + tr.base_map[j].to_string(names) + "\n";
            }
        }
        for (const auto &[d, m] : tr.blocks) {
            out += "  block " + d.to_string() + " [ ";
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (r != 0u) {
                    out += " ; ";
                }
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (c != 0u) {
                        out += ", ";
                    }
                    out += m(r, c).to_string(names);
                }
            }
            out += " ]\n";
        }
        out += "}\n";
    }
    return out;
}

std::string print(const morphism_document &m)
{
    std::string out = header_text(document_kind::morphism, m.name, *m.map.source());
    out += "map {\n";
    print_assignments(out, m.map.source(), m.map.images());
    out += "}\n";
    return out;
}

std::string print(const series_document &s)
{
    return header_text(document_kind::series, s.name, *s.value.table()) + "value " + s.value.to_string() + "\n";
}

std::string print(const splitting_document &s)
{
    std::string out = header_text(document_kind::splitting, s.name, *s.table, s.iso.order);
    for (const auto &[chart, m] : s.iso.maps) {
        out += "morphism " + chart + " {\n";
        print_assignments(out, s.table, m.images());
        out += "}\n";
    }
    return out;
}

std::string print(const document &d)
{
    return std::visit([](const auto &v) { return print(v); }, d);
}

} // namespace zsuper::text
