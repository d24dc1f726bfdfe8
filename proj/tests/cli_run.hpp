#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef CONCYCLIC_CLI
#error "CONCYCLIC_CLI must name the command-line binary"
#endif

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + CONCYCLIC_CLI + "\" " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}
