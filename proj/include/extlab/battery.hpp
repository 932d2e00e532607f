#pragma once

#include "extlab/io.hpp"

#include <map>
#include <string>
#include <vector>

namespace extlab
{
    inline constexpr const char *tool_version = "0.1.0";

    struct CheckResult
    {
        std::string suite;
        std::string name;
        bool passed = false;
        std::string detail;
        double seconds = 0;
        /// Deterministic evidence (witnesses, counts, tables); its bytes are checksummed.
        Json certificate;
    };

    struct BatteryOptions
    {
        int jobs = 1;
    };

    /// theorems, lemmas, formulas, embeddings.
    const std::vector<std::string> &suite_names();

    /// Runs one suite, or every suite for "all". Throws std::invalid_argument for an
    /// unknown suite name. Exceptions inside a check turn into a failed result.
    std::vector<CheckResult> run_suite(const std::string &suite, const BatteryOptions &options = {});

    struct RunManifest
    {
        std::string command;
        Json parameters = Json::object();
        std::vector<CheckResult> checks;
        double seconds = 0;
    };

    /// Checksums are FNV-1a over the compact dump of each certificate.
    Json manifest_to_json(const RunManifest &m);
}
