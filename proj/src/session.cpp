#include "qratpp/session.hpp"

#include <charconv>
#include <stdexcept>

namespace qratpp {

namespace {

bool parse_bool(std::string_view v, bool& out) {
    if (v == "on" || v == "true" || v == "1") {
        out = true;
        return true;
    }
    if (v == "off" || v == "false" || v == "0") {
        out = false;
        return true;
    }
    return false;
}

bool parse_u64(std::string_view v, uint64_t& out) {
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    return ec == std::errc{} && ptr == v.data() + v.size();
}

} // namespace

SessionStatus Session::import_qdimacs(std::string_view text) {
    try {
        ParseResult parsed = parse_qdimacs(text, parse_options_);
        formula_ = std::move(parsed.formula);
        last_outcome_.reset();
        diagnostics_.clear();
        if (parsed.diagnostics.tautologies_dropped > 0)
            diagnostics_.push_back(
                "dropped " + std::to_string(parsed.diagnostics.tautologies_dropped) +
                " tautological clause(s)");
        if (parsed.diagnostics.duplicate_literals_merged > 0)
            diagnostics_.push_back(
                "merged " + std::to_string(parsed.diagnostics.duplicate_literals_merged) +
                " duplicate literal(s)");
        if (parsed.diagnostics.free_variables_bound > 0)
            diagnostics_.push_back(
                "bound " + std::to_string(parsed.diagnostics.free_variables_bound) +
                " free variable(s) in an outermost existential block");
        return {};
    } catch (const ParseError& e) {
        diagnostics_.push_back(e.what());
        return {false, e.what()};
    }
}

SessionStatus Session::import_formula(Pcnf formula) {
    if (!formula.normalized())
        return {false, "formula must be normalized before import"};
    formula_ = std::move(formula);
    last_outcome_.reset();
    diagnostics_.clear();
    return {};
}

SessionStatus Session::configure(std::string_view option, std::string_view value) {
    bool b = false;
    uint64_t n = 0;
    if (option == "qbce" && parse_bool(value, b)) {
        config_.qbce = b;
    } else if (option == "qat" && parse_bool(value, b)) {
        config_.qat = b;
    } else if (option == "qrate" && parse_bool(value, b)) {
        config_.qrate = b;
    } else if (option == "ble" && parse_bool(value, b)) {
        config_.ble = b;
    } else if (option == "qratu" && parse_bool(value, b)) {
        config_.qratu = b;
    } else if (option == "strict" && parse_bool(value, b)) {
        parse_options_.strict = b;
    } else if (option == "recheck-everything" && parse_bool(value, b)) {
        config_.recheck_everything = b;
    } else if (option == "mode") {
        if (value == "qrat+" || value == "qratplus")
            config_.mode = CheckMode::QratPlus;
        else if (value == "qrat" || value == "classic")
            config_.mode = CheckMode::QratClassic;
        else
            return {false, "mode must be qrat+ or qrat"};
    } else if (option == "seed") {
        if (value == "none")
            config_.seed.reset();
        else if (parse_u64(value, n))
            config_.seed = n;
        else
            return {false, "seed must be an unsigned integer or none"};
    } else if (option == "soft-time-limit") {
        if (value == "none") {
            config_.soft_time_limit_seconds.reset();
        } else {
            try {
                config_.soft_time_limit_seconds = std::stod(std::string(value));
            } catch (const std::exception&) {
                return {false, "soft-time-limit must be seconds or none"};
            }
        }
    } else if (option == "max-rounds") {
        if (value == "none")
            config_.max_outer_rounds.reset();
        else if (parse_u64(value, n))
            config_.max_outer_rounds = n;
        else
            return {false, "max-rounds must be an unsigned integer or none"};
    } else {
        return {false, "unknown option '" + std::string(option) + "'"};
    }
    return {};
}

const Pcnf& Session::formula() const {
    if (!formula_)
        throw std::logic_error("no formula imported");
    return *formula_;
}

PreprocessOutcome Session::preprocess() {
    if (!formula_)
        throw std::logic_error("preprocess before import");
    last_outcome_ = run_pipeline(*formula_, config_);
    return *last_outcome_;
}

std::string Session::export_qdimacs() const {
    return write_qdimacs(formula());
}

FormulaStats Session::stats() const {
    return compute_stats(formula());
}

} // namespace qratpp
