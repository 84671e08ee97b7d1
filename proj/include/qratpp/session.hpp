#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qratpp/pcnf.hpp"
#include "qratpp/pipeline.hpp"
#include "qratpp/qdimacs.hpp"

namespace qratpp {

struct SessionStatus {
    bool ok = true;
    std::string message;
};

// Embeddable front end: import a PCNF, configure the workflow, preprocess,
// export. A Session owns one formula at a time; importing again replaces it.
// Sessions are independent of each other.
class Session {
public:
    SessionStatus import_qdimacs(std::string_view text);
    SessionStatus import_formula(Pcnf formula); // must be normalized

    // Options: qbce, qat, qrate, ble, qratu (on/off); mode (qrat+/qrat);
    // seed (integer or "none"); soft-time-limit (seconds or "none");
    // max-rounds (integer or "none"); strict (on/off, parser bound check);
    // recheck-everything (on/off).
    SessionStatus configure(std::string_view option, std::string_view value);

    bool has_formula() const { return formula_.has_value(); }
    const Pcnf& formula() const; // throws std::logic_error when absent

    PreprocessOutcome preprocess(); // throws std::logic_error when no formula

    std::string export_qdimacs() const;
    FormulaStats stats() const;

    Config& config() { return config_; }
    const Config& config() const { return config_; }
    const std::optional<PreprocessOutcome>& last_outcome() const { return last_outcome_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::optional<Pcnf> formula_;
    Config config_;
    ParseOptions parse_options_;
    std::optional<PreprocessOutcome> last_outcome_;
    std::vector<std::string> diagnostics_;
};

} // namespace qratpp
