#include <zsuper_cli/cli.hpp>

#include <fstream>
#include <sstream>

#include <zsuper/errors.hpp>
#include <zsuper/split_model.hpp>
#include <zsuper/splitting.hpp>
#include <zsuper/text_format.hpp>

namespace zsuper::cli
{

namespace
{

constexpr unsigned default_k = 6;

struct input_failure : error {
    using error::error;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_failure("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw input_failure("cannot write " + path);
    }
}

void require_inputs(const command &c, std::size_t n)
{
    if (c.inputs.size() != n) {
        throw input_failure("expected " + std::to_string(n) + " input file(s), got " + std::to_string(c.inputs.size()));
    }
}

atlas load_atlas(const command &c, const std::string &path)
{
    auto a = text::parse_atlas(read_file(path));
    if (c.convention && *c.convention != a.convention()) {
        return a.with_convention(*c.convention);
    }
    return a;
}

// A document either goes to --out (report names the file) or is the output.
void emit(outcome &o, const command &c, const std::string &document)
{
    if (c.out_path) {
        write_file(*c.out_path, document);
        o.text += "wrote " + *c.out_path + "\n";
    } else {
        o.text += document;
    }
}

outcome from_report(const report &r)
{
    outcome o;
    o.text = r.to_text();
    o.status = r.passed() ? exit_pass : exit_fail;
    return o;
}

outcome run_check(const command &c)
{
    require_inputs(c, 1);
    return from_report(check_cocycle(load_atlas(c, c.inputs[0]), c.k.value_or(default_k)));
}

outcome run_superize(const command &c)
{
    require_inputs(c, 1);
    if (!c.convention) {
        throw input_failure("superize needs --convention");
    }
    const auto data = text::parse_atlas_data(read_file(c.inputs[0]));
    const auto a = superize(data, *c.convention);
    auto o = from_report(check_cocycle(a, c.k.value_or(default_k)));
    std::string report_text = std::move(o.text);
    o.text.clear();
    emit(o, c, text::print(a));
    if (c.out_path) {
        o.text += report_text;
    } else {
        o.diagnostics += report_text;
    }
    return o;
}

outcome run_tangent(const command &c)
{
    require_inputs(c, 1);
    const auto lifted = tangent_lift(load_atlas(c, c.inputs[0]));
    outcome o;
    emit(o, c, text::print(lifted));
    return o;
}

outcome run_linearize(const command &c)
{
    require_inputs(c, 1);
    outcome o;
    emit(o, c, text::print(linearize(load_atlas(c, c.inputs[0]))));
    return o;
}

outcome run_split(const command &c)
{
    require_inputs(c, 1);
    const auto src = read_file(c.inputs[0]);
    outcome o;
    if (text::detect_kind(src) == text::document_kind::bundle) {
        emit(o, c, text::print(split_atlas(text::parse_bundle(src))));
        return o;
    }
    auto a = text::parse_atlas(src);
    if (c.convention && *c.convention != a.convention()) {
        a = a.with_convention(*c.convention);
    }
    solver_options opts;
    opts.degree_bound = c.degree_bound;
    if (c.reverse_charts) {
        opts.chart_order.assign(a.charts().rbegin(), a.charts().rend());
    }
    const auto k = c.k.value_or(default_k);
    if (k == 0u) {
        throw input_failure("split needs --k >= 1");
    }
    text::splitting_document doc{a.name(), a.table(), build_splitting_iso(a, k, opts)};
    emit(o, c, text::print(doc));
    return o;
}

outcome run_verify(const command &c)
{
    require_inputs(c, 2);
    const auto a = load_atlas(c, c.inputs[0]);
    auto doc = text::parse_splitting(read_file(c.inputs[1]));
    if (*doc.table->with_rule(a.convention()) != *a.table()) {
        throw table_mismatch("splitting variables differ from the atlas variables");
    }
    // Re-express the chart maps over the atlas table.
    splitting_iso iso;
    iso.order = doc.iso.order;
    for (const auto &[chart, m] : doc.iso.maps) {
        std::vector<graded_series> images;
        for (const auto &s : m.images()) {
            images.push_back(s.rebind(a.table()));
        }
        iso.maps.emplace(chart, morphism(a.table(), a.table(), std::move(images), iso.order));
    }
    const auto k = c.k.value_or(iso.order);
    if (k == 0u) {
        throw input_failure("verify needs --k >= 1");
    }
    if (k > iso.order) {
        throw input_failure("splitting is only known mod J^" + std::to_string(iso.order + 1) + ", cannot verify at k = "
                            + std::to_string(k));
    }
    return from_report(verify_splitting(a, iso, k));
}

outcome run_eval(const command &c)
{
    if (c.inputs.empty() || c.inputs.size() > 2) {
        throw input_failure("eval takes a document, or a morphism and a series");
    }
    outcome o;
    if (c.inputs.size() == 1) {
        emit(o, c, text::print(text::parse(read_file(c.inputs[0]))));
        return o;
    }
    const auto m = text::parse_morphism(read_file(c.inputs[0]));
    const auto s = text::parse_series(read_file(c.inputs[1]));
    if (*m.map.target() != *s.value.table()) {
        throw table_mismatch("series variables differ from the morphism variables");
    }
    const auto value = m.map.pullback(s.value.rebind(m.map.target()), c.k);
    emit(o, c, text::print(text::series_document{s.name, value}));
    return o;
}

} // namespace

std::optional<verb> parse_verb(const std::string &word)
{
    if (word == "check-cocycle") {
        return verb::check_cocycle;
    }
    if (word == "superize") {
        return verb::superize;
    }
    if (word == "tangent-lift") {
        return verb::tangent_lift;
    }
    if (word == "linearize") {
        return verb::linearize;
    }
    if (word == "split") {
        return verb::split;
    }
    if (word == "verify") {
        return verb::verify;
    }
    if (word == "eval") {
        return verb::eval;
    }
    return std::nullopt;
}

outcome run(const command &c)
{
    try {
        switch (c.action) {
        case verb::check_cocycle:
            return run_check(c);
        case verb::superize:
            return run_superize(c);
        case verb::tangent_lift:
            return run_tangent(c);
        case verb::linearize:
            return run_linearize(c);
        case verb::split:
            return run_split(c);
        case verb::verify:
            return run_verify(c);
        case verb::eval:
            return run_eval(c);
        }
    } catch (const unsolvable_at_bound &e) {
        return {exit_fail, {}, std::string("FAIL ") + e.what() + "\n"};
    } catch (const cocycle_failure &e) {
        return {exit_fail, {}, std::string("FAIL ") + e.what() + "\n"};
    } catch (const inconsistent_family &e) {
        return {exit_fail, {}, std::string("FAIL ") + e.what() + "\n"};
    } catch (const non_invertible_linear_part &e) {
        return {exit_fail, {}, std::string("FAIL ") + e.what() + "\n"};
    } catch (const error &e) {
        return {exit_input_error, {}, std::string("error: ") + e.what() + "\n"};
    }
    return {exit_input_error, {}, "error: unknown command\n"};
}

} // namespace zsuper::cli
