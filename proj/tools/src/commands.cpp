#include "salem_cli/commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "salem/check.hpp"
#include "salem/cylinder.hpp"
#include "salem/digits.hpp"

namespace salem::cli {

namespace {

const ProbabilityVector& require_system(const CommandRequest& req) {
    if (!req.system) {
        throw UsageError("--p", "a probability vector is required (--p or --q)");
    }
    return *req.system;
}

const std::string& require_text(const std::optional<std::string>& value, const std::string& flag) {
    if (!value) {
        throw UsageError(flag, "is required for this command");
    }
    return *value;
}

// Wraps library parse errors so the message names the flag.
template <typename F>
auto parse_flag(const std::string& flag, F&& parse) {
    try {
        return parse();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(flag, e.what());
    }
}

void print_value(std::ostream& out, const std::string& key, const Rational& v, const CommandRequest& req) {
    out << key << '=' << v << '\n';
    if (!req.exact) {
        out << key << "_decimal=" << to_decimal(v, req.places) << '\n';
    }
}

void run_encode(const CommandRequest& req, std::ostream& out) {
    const auto& P = require_system(req);
    if (!req.x) {
        throw UsageError("--x", "is required for encode");
    }
    if (req.max_digits == 0) {
        throw UsageError("--max-digits", "must be positive");
    }
    const auto r = parse_flag("--x", [&] { return encode(P, *req.x, req.max_digits); });
    if (r.kind == EncodeKind::complete) {
        out << "digits=" << format_digits(*r.digits) << '\n' << "kind=complete\n";
    } else {
        out << "digits=" << format_digits(*r.prefix) << '\n'
            << "kind=truncated\n"
            << "remainder=" << r.remainder << '\n';
    }
}

void run_decode(const CommandRequest& req, std::ostream& out) {
    const auto& P = require_system(req);
    const auto& text = require_text(req.digits, "--digits");
    const auto d = parse_flag("--digits", [&] { return parse_number(text, P.alphabet()); });
    const auto v = eval_periodic(P, d);
    out << v << '\n';
    if (!req.exact) {
        out << to_decimal(v, req.places) << '\n';
    }
}

void run_cylinder(const CommandRequest& req, std::ostream& out) {
    const auto& P = require_system(req);
    const auto& text = require_text(req.base, "--base");
    const auto c = cylinder_of(P, parse_flag("--base", [&] { return parse_word(text, P.alphabet()); }));
    out << "inf=" << c.inf() << ", sup=" << c.sup() << ", measure=" << c.measure() << '\n';
    if (!req.exact) {
        out << "inf=" << to_decimal(c.inf(), req.places) << ", sup=" << to_decimal(c.sup(), req.places)
            << ", measure=" << to_decimal(c.measure(), req.places) << '\n';
    }
}

DigitPermutation permutation_for(const CommandRequest& req, const ProbabilityVector& P) {
    if (req.permutation) {
        if (req.permutation->alphabet() != P.alphabet()) {
            throw UsageError("--perm", "permutation size does not match q=" + std::to_string(P.q()));
        }
        return *req.permutation;
    }
    if (P.q() == 3) {
        return theta_standard();
    }
    throw UsageError("--perm", "is required when q != 3");
}

void run_map(const CommandRequest& req, std::ostream& out) {
    const auto& P = require_system(req);
    const auto perm = permutation_for(req, P);
    if (req.base) {
        const auto c = cylinder_of(P, parse_flag("--base", [&] { return parse_word(*req.base, P.alphabet()); }));
        const auto img = f_image(c, perm);
        out << "base=" << format_digits(img.base()) << '\n'
            << "inf=" << img.inf() << ", sup=" << img.sup() << ", measure=" << img.measure() << '\n'
            << "source_measure=" << c.measure() << '\n';
        return;
    }
    const auto& text = require_text(req.digits, "--digits");
    const auto d = parse_flag("--digits", [&] { return parse_number(text, P.alphabet()); });
    out << "digits=" << format_digits(permute_digits(perm, d)) << '\n';
    print_value(out, "value", f_map(P, perm, d), req);
}

void run_alternate(const CommandRequest& req, std::ostream& out) {
    const auto& P = require_system(req);
    const auto scheme = req.scheme.value_or(AlternatingScheme::odd_positions);
    if (req.base) {
        const auto base = parse_flag("--base", [&] { return parse_word(*req.base, P.alphabet()); });
        const auto flipped = flip_alternating(scheme, base);
        out << "digits=" << format_digits(flipped) << '\n'
            << "measure=" << alternating_measure(P, flipped) << '\n'
            << "source_measure=" << cylinder_of(P, base).measure() << '\n';
        return;
    }
    const auto& text = require_text(req.digits, "--digits");
    const auto d = parse_flag("--digits", [&] { return parse_number(text, P.alphabet()); });
    const auto flipped = flip_alternating(scheme, d);
    out << "digits=" << format_digits(flipped) << '\n';
    print_value(out, "value", eval_periodic(P, flipped), req);
}

int run_check(const CommandRequest& req, std::ostream& out) {
    const auto report = run_checks(req.seed, req.cases);
    for (const auto& s : report.suites) {
        out << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << '/' << (s.passed + s.failed)
            << '\n';
        if (s.failed != 0) {
            out << "  first failure: " << s.first_failure << '\n';
        }
    }
    out << "total: " << report.passed() << " passed, " << report.failed() << " failed\n";
    return report.failed() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> sample_points(const ProbabilityVector& P, std::size_t n) {
    if (n == 0) {
        throw UsageError("--n", "must be at least 1");
    }
    const auto uniform = ProbabilityVector::uniform(P.q());
    std::vector<std::pair<Rational, Rational>> rows;
    rows.reserve(n + 1);
    const auto den = static_cast<std::int64_t>(n);
    for (std::int64_t k = 0; k <= den; ++k) {
        Rational x(k, den);
        // Remainders of k/n all have denominators dividing n, so a cycle
        // closes within n + 1 digits.
        auto r = encode(uniform, x, n + 2);
        Rational s = eval_periodic(P, *r.digits);
        rows.emplace_back(std::move(x), std::move(s));
    }
    return rows;
}

std::string sample_csv(const ProbabilityVector& P, std::size_t n, unsigned places) {
    std::string out = "x,S\n";
    for (const auto& [x, s] : sample_points(P, n)) {
        out += to_decimal(x, places);
        out += ',';
        out += to_decimal(s, places);
        out += '\n';
    }
    return out;
}

std::string demo_table(bool exact, unsigned places) {
    const auto A = ProbabilityVector::parse("1/2,1/3,1/6");
    const auto B = ProbabilityVector::parse("1/4,1/2,1/4");
    const auto theta = theta_standard();
    const Alphabet ternary(3);

    const auto x1 = parse_number("22(0)", ternary);
    const auto x2 = parse_number("21(0)", ternary);
    const auto c11122 = cylinder_of(B, parse_word("11122", ternary));
    const auto image = f_image(c11122, theta);
    const auto base = parse_word("121200", ternary);
    const auto flipped = flip_alternating(AlternatingScheme::odd_positions, base);

    const std::vector<std::tuple<std::string, char, Rational>> rows = {
        {"|x1 - x2|, x1=22(0), x2=21(0)", 'A', abs(eval_periodic(A, x1) - eval_periodic(A, x2))},
        {"|f(x1) - f(x2)|, theta", 'A', abs(f_map(A, theta, x1) - f_map(A, theta, x2))},
        {"measure of cylinder " + format_digits(c11122.base()), 'B', c11122.measure()},
        {"measure of f-image " + format_digits(image.base()), 'B', image.measure()},
        {"measure of cylinder " + format_digits(base), 'A', cylinder_of(A, base).measure()},
        {"alternating measure of " + format_digits(flipped), 'A', alternating_measure(A, flipped)},
    };

    std::ostringstream out;
    out << "# A: p=" << A.to_string() << "  B: p=" << B.to_string() << '\n';
    out << std::left << std::setw(36) << "quantity" << std::setw(8) << "system" << "value";
    if (!exact) {
        out << std::string(4, ' ') << "decimal";
    }
    out << '\n';
    for (const auto& [label, system, value] : rows) {
        out << std::left << std::setw(36) << label << std::setw(8) << system;
        if (exact) {
            out << value.to_string();
        } else {
            out << std::setw(9) << value.to_string() << "  " << to_decimal(value, places);
        }
        out << '\n';
    }
    return out.str();
}

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        switch (req.command) {
            case Command::encode:
                run_encode(req, out);
                break;
            case Command::decode:
                run_decode(req, out);
                break;
            case Command::cylinder:
                run_cylinder(req, out);
                break;
            case Command::map:
                run_map(req, out);
                break;
            case Command::alternate:
                run_alternate(req, out);
                break;
            case Command::demo:
                out << demo_table(req.exact, req.places);
                break;
            case Command::sample:
                out << sample_csv(require_system(req), req.n, req.places);
                break;
            case Command::check:
                return run_check(req, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact P_q / P_theta / alternating representations of [0, 1]", "salem"};
    app.require_subcommand(1);

    std::optional<std::string> p_text;
    std::optional<std::uint32_t> q_value;
    std::optional<std::string> perm_text;
    std::optional<std::string> flip_text;
    std::optional<std::string> x_text;
    CommandRequest req;

    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_text, "probabilities p_0,...,p_{q-1} as fractions");
        cmd->add_option("--q", q_value, "uniform system with q digits");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--places", req.places, "decimal places")->capture_default_str();
        cmd->add_flag("--exact", req.exact, "exact fractions only");
    };

    auto* encode_cmd = app.add_subcommand("encode", "greedy digits of a rational x");
    add_system(encode_cmd);
    encode_cmd->add_option("--x", x_text, "rational in [0, 1]")->required();
    encode_cmd->add_option("--max-digits", req.max_digits, "digit budget")->capture_default_str();

    auto* decode_cmd = app.add_subcommand("decode", "exact value of a digit string");
    add_system(decode_cmd);
    decode_cmd->add_option("--digits", req.digits, "prefix or prefix(period)")->required();
    add_output(decode_cmd);

    auto* cylinder_cmd = app.add_subcommand("cylinder", "endpoints and measure of a cylinder");
    add_system(cylinder_cmd);
    cylinder_cmd->add_option("--base", req.base, "cylinder base word")->required();
    add_output(cylinder_cmd);

    auto* map_cmd = app.add_subcommand("map", "digit permutation map f");
    add_system(map_cmd);
    map_cmd->add_option("--perm", perm_text, "digit images, default 0,2,1 for q=3");
    map_cmd->add_option("--digits", req.digits, "point to map");
    map_cmd->add_option("--base", req.base, "cylinder to map");
    add_output(map_cmd);

    auto* alternate_cmd = app.add_subcommand("alternate", "alternating flip and measure");
    add_system(alternate_cmd);
    alternate_cmd->add_option("--flip", flip_text, "odd|even (default odd)");
    alternate_cmd->add_option("--base", req.base, "finite base word");
    alternate_cmd->add_option("--digits", req.digits, "periodic digit string");
    add_output(alternate_cmd);

    auto* demo_cmd = app.add_subcommand("demo", "table of the worked example values");
    add_output(demo_cmd);

    auto* sample_cmd = app.add_subcommand("sample", "CSV samples of S on a uniform grid");
    add_system(sample_cmd);
    sample_cmd->add_option("--n", req.n, "grid size")->capture_default_str();
    sample_cmd->add_option("--places", req.places, "decimal places")->capture_default_str();

    auto* check_cmd = app.add_subcommand("check", "run the seeded property suites");
    check_cmd->add_option("--seed", req.seed, "random seed")->capture_default_str();
    check_cmd->add_option("--cases", req.cases, "cases per suite")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::vector<std::pair<CLI::App*, Command>> commands = {
        {encode_cmd, Command::encode}, {decode_cmd, Command::decode},   {cylinder_cmd, Command::cylinder},
        {map_cmd, Command::map},       {alternate_cmd, Command::alternate}, {demo_cmd, Command::demo},
        {sample_cmd, Command::sample}, {check_cmd, Command::check},
    };
    for (const auto& [cmd, command] : commands) {
        if (cmd->parsed()) {
            req.command = command;
        }
    }

    try {
        if (p_text && q_value) {
            throw UsageError("--q", "cannot be combined with --p");
        }
        if (p_text) {
            req.system = parse_flag("--p", [&] { return ProbabilityVector::parse(*p_text); });
        } else if (q_value) {
            req.system = parse_flag("--q", [&] { return ProbabilityVector::uniform(*q_value); });
        }
        if (perm_text) {
            req.permutation = parse_flag("--perm", [&] { return DigitPermutation::parse(*perm_text); });
        }
        if (flip_text) {
            req.scheme = parse_flag("--flip", [&] { return parse_scheme(*flip_text); });
        }
        if (x_text) {
            req.x = parse_flag("--x", [&] { return Rational::parse(*x_text); });
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run_command(req, out, err);
}

}  // namespace salem::cli
