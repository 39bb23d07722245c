#pragma once

// Runs the CLI binary as a subprocess and captures stdout and exit status.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct CliResult
{
    int status = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args)
{
    const std::string cmd = std::string("\"") + SARKISOV_CLI + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("cannot run " + cmd);
    }
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}
