#ifndef ZSUPER_CLI_CLI_HPP
#define ZSUPER_CLI_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include <zsuper/degree.hpp>

namespace zsuper::cli
{

enum class verb { check_cocycle, superize, tangent_lift, linearize, split, verify, eval };

struct command {
    verb action = verb::check_cocycle;
    std::vector<std::string> inputs;
    std::optional<unsigned> k;
    unsigned degree_bound = 3;
    std::optional<sign_rule> convention;
    std::optional<std::string> out_path;
    // Reverses the chart order used to order unknowns in `split`.
    bool reverse_charts = false;
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input_error = 2;

struct outcome {
    int status = exit_pass;
    // Report or document for stdout.
    std::string text;
    // Diagnostics for stderr.
    std::string diagnostics;
};

// Runs one command. Documents go to out_path when set (the report then
// goes to `text`), otherwise to `text`.
outcome run(const command &c);

std::optional<verb> parse_verb(const std::string &word);

} // namespace zsuper::cli

#endif
