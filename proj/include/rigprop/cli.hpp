#pragma once

/**
 * @file cli.hpp
 * @brief The rigprop command line, callable in-process.
 *
 * Exit status: 0 success, 1 `equal` answered false, 2 parse or typecheck
 * error, 3 rig, shape or configuration mismatch, 4 an axiom check failed,
 * 64 bad usage.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigprop/axioms.hpp"
#include "rigprop/error.hpp"
#include "rigprop/instances.hpp"
#include "rigprop/matrix.hpp"
#include "rigprop/rewrite.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/semantics.hpp"
#include "rigprop/term.hpp"
#include "rigprop/term_lang.hpp"

namespace rigprop::cli {

enum exit_code : int {
    ok = 0,
    not_equal = 1,
    parse_failure = 2,
    mismatch = 3,
    check_failure = 4,
    usage = 64,
};

struct config {
    std::string verb;
    std::vector<std::string> inputs;
    std::optional<std::string> rig;
    std::size_t bound = 100;
    std::string rules = "auto";
    std::string format;
};

namespace detail {

struct source {
    std::string label;
    std::string text;
};

class session {
public:
    session(config cfg, std::istream& in, std::ostream& out) : cfg_(std::move(cfg)), in_(in), out_(out) {}

    int run()
    {
        const std::string& v = cfg_.verb;
        if (v == "check") return with_term_rig(1, [&]<rig R>() { return check<R>(); });
        if (v == "eval") return with_term_rig(1, [&]<rig R>() { return evaluate<R>(); });
        if (v == "equal") return with_term_rig(2, [&]<rig R>() { return equal<R>(); });
        if (v == "normalize") return with_term_rig(1, [&]<rig R>() { return normal_form<R>(); });
        if (v == "rewrite") return with_term_rig(1, [&]<rig R>() { return rewrite<R>(); });
        if (v == "render") return with_term_rig(1, [&]<rig R>() { return render<R>(); });
        if (v == "decompose") return with_matrix_rig([&]<rig R>() { return decompose_matrix<R>(); });
        if (v == "mat2rel") return with_matrix_rig([&]<rig R>() { return to_relation<R>(); });
        if (v == "mat2span") return with_matrix_rig([&]<rig R>() { return to_span<R>(); });
        if (v == "rel2mat") {
            expect_inputs(1);
            require_rig(boolean_rig::name);
            out_ << write_matrix(rel_to_matrix(read_relation(select(0))));
            return ok;
        }
        if (v == "span2mat") {
            expect_inputs(1);
            require_rig(natural_rig::name);
            out_ << write_matrix(span_to_matrix(read_span(select(0))));
            return ok;
        }
        if (v == "axioms") {
            expect_inputs(0);
            return with_rig(cfg_.rig.value_or("nat"), [&]<rig R>() { return axioms<R>(); });
        }
        throw usage_error("unknown command '" + v + "'");
    }

    /// Input text most recently loaded, for pointing at error spans.
    const source& last_source() const { return last_; }

    struct usage_error : error {
        using error::error;
    };

private:
    void expect_inputs(std::size_t n) const
    {
        if (cfg_.inputs.size() != n)
            throw usage_error(cfg_.verb + " takes " + std::to_string(n) + " input(s), got " +
                              std::to_string(cfg_.inputs.size()));
    }

    void require_rig(std::string_view name) const
    {
        if (cfg_.rig && *cfg_.rig != name)
            throw rig_mismatch(cfg_.verb + " works over '" + std::string(name) + "', not '" + *cfg_.rig + "'");
    }

    /// "-" is standard input, an existing file is read, anything else is the text itself.
    const std::string& load(std::size_t k)
    {
        loaded_.resize(cfg_.inputs.size());
        if (loaded_[k]) return *loaded_[k];
        const std::string& arg = cfg_.inputs[k];
        std::string text;
        if (arg == "-") {
            text.assign(std::istreambuf_iterator<char>(in_), {});
        } else if (std::error_code ec; std::filesystem::is_regular_file(arg, ec)) {
            std::ifstream file(arg, std::ios::binary);
            text.assign(std::istreambuf_iterator<char>(file), {});
        } else {
            text = arg;
        }
        loaded_[k] = std::move(text);
        return *loaded_[k];
    }

    /// Loads input k and makes it the target of error reports.
    const std::string& select(std::size_t k)
    {
        const std::string& arg = cfg_.inputs[k];
        const std::string& text = load(k);
        std::string label = arg == "-" ? "<stdin>" : arg == text ? "<argument " + std::to_string(k + 1) + ">" : arg;
        last_ = {std::move(label), text};
        return text;
    }

    template <class F>
    int with_term_rig(std::size_t inputs, F&& f)
    {
        expect_inputs(inputs);
        std::string name = cfg_.rig.value_or("");
        if (name.empty()) {
            select(0);
            name = term_rig_directive(load(0)).value_or("nat");
        }
        return with_rig(name, f);
    }

    template <class F>
    int with_matrix_rig(F&& f)
    {
        expect_inputs(1);
        const std::string name = matrix_rig_name(select(0));
        if (cfg_.rig && *cfg_.rig != name)
            throw rig_mismatch("matrix is over '" + name + "' but --rig " + *cfg_.rig + " was given");
        return with_rig(name, f);
    }

    template <rig R>
    term<R> term_input(std::size_t k)
    {
        return parse_term<R>(select(k));
    }

    template <rig R>
    int check()
    {
        const arity a = arity_of(term_input<R>(0));
        out_ << a.dom << " -> " << a.cod << "\n";
        return ok;
    }

    template <rig R>
    int evaluate()
    {
        out_ << write_matrix(eval(term_input<R>(0)));
        return ok;
    }

    template <rig R>
    int equal()
    {
        const term<R> a = term_input<R>(0);
        const term<R> b = term_input<R>(1);
        const bool same = equal_terms(a, b);
        out_ << (same ? "true" : "false") << "\n";
        return same ? ok : not_equal;
    }

    template <rig R>
    int normal_form()
    {
        emit_term(normalize(term_input<R>(0)), "text");
        return ok;
    }

    template <rig R>
    int render()
    {
        emit_term(term_input<R>(0), "dot");
        return ok;
    }

    template <rig R>
    int decompose_matrix()
    {
        emit_term(decompose(read_matrix<R>(last_.text)), "text");
        return ok;
    }

    template <rig R>
    int to_relation()
    {
        out_ << write_relation(matrix_to_rel(read_matrix<R>(last_.text)));
        return ok;
    }

    template <rig R>
    int to_span()
    {
        out_ << write_span(matrix_to_span(read_matrix<R>(last_.text)));
        return ok;
    }

    template <rig R>
    int rewrite()
    {
        const term<R> t = term_input<R>(0);
        const auto result = rewrite_bounded(t, rules<R>(), cfg_.bound);
        out_ << format_trace(result) << print_term(result.result) << "\n";
        return ok;
    }

    template <rig R>
    rule_set<R> rules() const
    {
        const std::string& selector = cfg_.rules;
        if (selector == "auto") return auto_rules<R>();
        if (selector == "base") return base_rules<R>();
        rig_flags flags{};
        std::size_t pos = 0;
        while (pos < selector.size()) {
            if (selector[pos] != '+') throw config_error("rule selector must be base, auto or +flag, got '" + selector + "'");
            const std::size_t next = std::min(selector.find('+', pos + 1), selector.size());
            flags |= parse_rule_flag(std::string_view(selector).substr(pos + 1, next - pos - 1));
            pos = next;
        }
        return extended_rules<R>(flags);
    }

    template <rig R>
    int axioms()
    {
        std::vector<check_result> rows = check_laws(bimonoid_laws<R>());
        std::vector<std::pair<value_t<R>, value_t<R>>> samples{
            {R::zero(), R::one()}, {R::one(), R::one()}, {from_natural<R>(2), from_natural<R>(3)}};
        if constexpr (ring<R>) samples.emplace_back(minus_one<R>(), from_natural<R>(2));
        for (const auto& [r, s] : samples)
            for (auto row : check_laws(scalar_laws<R>(r, s))) {
                row.name += " [" + R::print(r) + ", " + R::print(s) + "]";
                rows.push_back(row);
            }
        rows.push_back({"special iff idempotent addition",
                        special_check<R>() == R::flags.contains(rig_flag::idempotent_add)});
        if (R::flags.contains(rig_flag::char_two)) {
            using T = term<R>;
            rows.push_back({"char-two", eval(T::seq(T::delta(), T::mu())) == eval(T::seq(T::eps(), T::eta()))});
        }
        if constexpr (ring<R>)
            for (const auto& row : antipode_checks<R>()) rows.push_back(row);

        std::size_t width = 0;
        for (const auto& row : rows) width = std::max(width, row.name.size());
        bool all = true;
        out_ << "axioms over " << R::name << "\n";
        for (const auto& row : rows) {
            out_ << "  " << row.name << std::string(width - row.name.size() + 2, ' ') << (row.passed ? "pass" : "FAIL")
                 << "\n";
            all = all && row.passed;
        }
        out_ << (all ? "all " + std::to_string(rows.size()) + " checks passed" : std::string("some checks failed"))
             << "\n";
        return all ? ok : check_failure;
    }

    template <rig R>
    void emit_term(const term<R>& t, std::string_view fallback)
    {
        const std::string format = cfg_.format.empty() ? std::string(fallback) : cfg_.format;
        if (format == "dot") out_ << render_dot(t);
        else out_ << print_term(t) << "\n";
    }

    config cfg_;
    std::istream& in_;
    std::ostream& out_;
    std::vector<std::optional<std::string>> loaded_;
    source last_;
};

/// The offending line with carets under the span.
inline std::string point_at(const source& src, const source_span& span)
{
    const std::string& text = src.text;
    const std::size_t at = std::min(span.start, text.size());
    const std::size_t prev = at == 0 ? std::string::npos : text.rfind('\n', at - 1);
    const std::size_t line_start = prev == std::string::npos ? 0 : prev + 1;
    const std::size_t line_end = std::min(text.find('\n', at), text.size());
    const std::size_t line_no = static_cast<std::size_t>(std::count(text.begin(), text.begin() + line_start, '\n')) + 1;
    const std::size_t width = std::max<std::size_t>(1, std::min(span.end, line_end) - std::min(at, line_end));
    std::string out = "  --> " + src.label + ":" + std::to_string(line_no) + ":" + std::to_string(at - line_start + 1) + "\n";
    out += "  | " + text.substr(line_start, line_end - line_start) + "\n";
    out += "  | " + std::string(at - line_start, ' ') + std::string(width, '^') + "\n";
    return out;
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"String diagrams over a commutative rig, compiled to matrices.", "rigprop"};
    config cfg;
    std::string rig_name;
    app.add_option("command", cfg.verb,
                   "check | eval | equal | decompose | normalize | rewrite | render | "
                   "rel2mat | mat2rel | span2mat | mat2span | axioms")
        ->required();
    app.add_option("inputs", cfg.inputs, "terms or files; '-' reads standard input");
    app.add_option("--rig", rig_name, "coefficient rig")
        ->check(CLI::IsMember({"bool", "nat", "int", "f2", "rat", "nnrat", "ratfunc"}));
    app.add_option("--bound", cfg.bound, "rewrite step bound")->check(CLI::NonNegativeNumber);
    app.add_option("--rules", cfg.rules, "base, auto, or +special / +chartwo / +antipode (combinable)");
    app.add_option("--format", cfg.format, "output format for terms")->check(CLI::IsMember({"text", "dot"}));
    app.allow_extras(false);
    app.positionals_at_end(false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }
    if (!rig_name.empty()) cfg.rig = rig_name;

    detail::session s(std::move(cfg), in, out);
    try {
        return s.run();
    } catch (const detail::session::usage_error& e) {
        err << "usage: " << e.what() << "\n";
        return usage;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n" << detail::point_at(s.last_source(), e.span());
        return parse_failure;
    } catch (const typecheck_error& e) {
        err << "type error: " << e.what() << "\n";
        if (e.span()) err << detail::point_at(s.last_source(), *e.span());
        return parse_failure;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return mismatch;
    }
}

} // namespace rigprop::cli
