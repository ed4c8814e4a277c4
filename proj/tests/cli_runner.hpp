#pragma once

// Runs the nak binary through the shell and captures stdout and the exit status.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "nak/nak.hpp"

namespace nak::testing {

struct CliResult {
    int status = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args, bool keep_stderr = false) {
    const std::string cmd = std::string(NAK_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

/// Scratch directory holding fixture files written from the library's own serializer.
class FixtureDir {
public:
    FixtureDir() {
        dir_ = std::filesystem::temp_directory_path() / ("nak-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir_);
    }
    ~FixtureDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }

    std::string write(const std::string& name, const std::string& contents) const {
        const auto path = dir_ / name;
        std::ofstream(path, std::ios::binary) << contents;
        return path.string();
    }
    std::string write(const Fixture& f) const { return write(f.name + ".json", fixture_json(f).dump(2)); }

private:
    std::filesystem::path dir_;
};

} // namespace nak::testing
