#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stern3/stern3.hpp"

namespace stern3::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Seed parse_seed(const std::string& text) {
    std::vector<BigInt> parts;
    std::stringstream ss(text);
    for (std::string cell; std::getline(ss, cell, ',');) {
        if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("seed components must be nonnegative integers: " + text);
        parts.emplace_back(cell);
    }
    if (parts.size() != 3)
        throw usage_error("seed needs exactly three components: " + text);
    return Seed(parts[0], parts[1], parts[2]);
}

std::size_t memo_budget_from_env() {
    const char* raw = std::getenv("STERN3_MEMO_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return default_memo_budget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size())
            throw std::invalid_argument(raw);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw usage_error(std::string("STERN3_MEMO_BUDGET is not a nonnegative integer: ") + raw);
    }
}

// Writes to `path` if given, else to `out`.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw usage_error("cannot write " + path);
    body(file);
    file.flush();
    if (!file)
        throw usage_error("failed writing " + path);
}

nlohmann::json json_value(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    return v.str();
}

class value_writer {
public:
    value_writer(std::ostream& os, const std::string& format) : os_(os), format_(format) {
        if (format_ == "json")
            os_ << '[';
    }

    void operator()(const BigInt& v) {
        if (format_ == "plain") {
            os_ << v << '\n';
        } else if (format_ == "json") {
            os_ << (first_ ? "" : ",") << json_value(v).dump();
        } else {
            os_ << (first_ ? "" : ",") << v;
        }
        first_ = false;
    }

    void finish() {
        if (format_ == "json")
            os_ << "]\n";
        else if (format_ == "csv")
            os_ << '\n';
    }

private:
    std::ostream& os_;
    std::string format_;
    bool first_ = true;
};

nlohmann::json report_json(const SuiteReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"counterexample", c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json()}});
    return {{"suite", rep.suite}, {"max_level", rep.max_level}, {"checks", checks}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stern triatomic sequence toolkit", "stern3"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string seed_text = "1,1,1";
    std::string out_path;
    const std::vector<std::string> formats{"csv", "json", "plain"};

    Index count = 0;
    auto* gen = app.add_subcommand("gen", "print a_1 .. a_count");
    gen->add_option("--count", count, "number of terms")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed_text, "a1,a2,a3");
    gen->add_option("--format", format)->check(CLI::IsMember(formats));
    gen->add_option("--out", out_path, "output file");

    int level_n = 0;
    bool level_sum_only = false;
    auto* level = app.add_subcommand("level", "print one level of the sequence");
    level->add_option("--n", level_n, "level")->required()->check(CLI::Range(0, max_level));
    level->add_flag("--sum", level_sum_only, "print only the level sum");
    level->add_option("--seed", seed_text, "a1,a2,a3");
    level->add_option("--format", format)->check(CLI::IsMember(formats));
    level->add_option("--out", out_path, "output file");

    int delta_max = 0;
    bool compare = false;
    auto* delta = app.add_subcommand("delta", "occurrence counts per level as CSV");
    delta->add_option("--max-level", delta_max, "last level")->required()->check(CLI::Range(0, max_level));
    delta->add_flag("--compare-paper", compare, "diff against the reference table");
    delta->add_option("--out", out_path, "CSV output file");

    std::string suite;
    SuiteOptions sopt;
    bool as_json = false;
    int depth_opt = -1;
    Index max_n_opt = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all|symmetry|sums|tribonacci|delta|graph|series|matrix")->required();
    verify->add_option("--max-level", sopt.max_level, "last level checked")->check(CLI::Range(0, 16));
    verify->add_option("--depth", depth_opt, "graph depth (default: max-level)")->check(CLI::Range(0, 12));
    verify->add_option("--max-n", max_n_opt, "last series index (default: end of level min(max-level,4))")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "print the JSON report");

    std::string point_text;
    std::size_t farey_digits = 10;
    auto* farey = app.add_subcommand("farey", "Farey-map digit expansion of a rational point");
    farey->add_option("--point", point_text, "x,y as num/den,num/den")->required();
    farey->add_option("--digits", farey_digits, "number of digits")->check(CLI::PositiveNumber);

    Index series_max = 0;
    auto* series = app.add_subcommand("series", "coefficients of the generating function");
    series->add_option("--max-n", series_max, "last exponent")->required()->check(CLI::PositiveNumber);

    int svg_depth = 0;
    std::string svg_label = "values";
    auto* svg = app.add_subcommand("svg", "render the subdivision as SVG");
    svg->add_option("--depth", svg_depth, "subdivision depth")->required()->check(CLI::Range(0, max_svg_depth));
    svg->add_option("--out", out_path, "SVG file")->required();
    svg->add_option("--label", svg_label)->check(CLI::IsMember({"values", "addresses"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            const Seed seed = parse_seed(seed_text);
            emit(out_path, out, [&](std::ostream& os) {
                value_writer w(os, format);
                for_each_prefix_term(count, seed, [&](Index, const BigInt& v) { w(v); });
                w.finish();
            });
            return exit_ok;
        }

        if (level->parsed()) {
            const Seed seed = parse_seed(seed_text);
            emit(out_path, out, [&](std::ostream& os) {
                if (level_sum_only) {
                    os << level_sum(level_n, seed) << '\n';
                    return;
                }
                value_writer w(os, format);
                for_each_level_term(level_n, seed, [&](Index, const BigInt& v) { w(v); });
                w.finish();
            });
            return exit_ok;
        }

        if (delta->parsed()) {
            const auto table = delta_table(delta_max);
            emit(out_path, out, [&](std::ostream& os) { os << to_csv(table); });
            if (compare)
                (out_path.empty() ? err : out) << format_comparison(compare_with_reference(table));
            return exit_ok;
        }

        if (verify->parsed()) {
            if (!is_suite(suite)) {
                err << "unknown suite: " << suite << '\n';
                return exit_usage;
            }
            if (depth_opt >= 0)
                sopt.depth = depth_opt;
            if (max_n_opt > 0)
                sopt.max_n = max_n_opt;
            sopt.memo_budget = memo_budget_from_env();
            const auto rep = run_suite(suite, sopt);
            if (as_json) {
                out << report_json(rep).dump(2) << '\n';
            } else {
                for (const auto& c : rep.checks) {
                    out << (c.pass ? "PASS " : "FAIL ") << c.name;
                    if (c.counterexample)
                        out << ": " << *c.counterexample;
                    out << '\n';
                }
                out << (rep.all_pass() ? "all checks passed" : "verification FAILED") << '\n';
            }
            return rep.all_pass() ? exit_ok : exit_fail;
        }

        if (farey->parsed()) {
            RationalPoint p;
            try {
                p = parse_point(point_text);
            } catch (const std::exception& e) {
                throw usage_error(e.what());
            }
            if (!in_triangle(p))
                throw usage_error("point " + format_point(p) + " is outside the triangle 0 <= y <= x <= 1");
            const auto ex = expand(p, farey_digits);
            out << "digits:";
            for (Trit d : ex.digits)
                out << ' ' << int(d);
            out << '\n';
            for (std::size_t j = 0; j < ex.images.size(); ++j)
                out << "image " << j + 1 << ": " << format_point(ex.images[j]) << '\n';
            if (ex.stopped_at)
                out << "stopped: zero denominator at digit " << *ex.stopped_at + 1 << '\n';
            const auto row = bottom_row(ex.digits);
            out << "bottom_row: " << row.v1 << ',' << row.v2 << ',' << row.v3 << '\n';
            return exit_ok;
        }

        if (series->parsed()) {
            const auto s = series_coefficients(static_cast<std::size_t>(series_max));
            value_writer w(out, "csv");
            for (std::size_t e = 1; e <= static_cast<std::size_t>(series_max); ++e)
                w(s[e]);
            w.finish();
            return exit_ok;
        }

        if (svg->parsed()) {
            const auto doc = render_subdivision_svg(svg_depth, svg_label == "addresses" ? SvgLabels::addresses
                                                                                        : SvgLabels::values);
            emit(out_path, out, [&](std::ostream& os) { os << doc; });
            return exit_ok;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace stern3::cli
