#include "logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace ordseek {

int log_level() {
    static const int level = [] {
        const char* v = std::getenv("ORDSEEK_LOG");
        if (!v || !*v || std::strcmp(v, "off") == 0 || std::strcmp(v, "0") == 0) return 0;
        if (std::strcmp(v, "info") == 0 || std::strcmp(v, "1") == 0) return 1;
        if (std::strcmp(v, "debug") == 0 || std::strcmp(v, "2") == 0) return 2;
        return 1;
    }();
    return level;
}

void log_line(int level, const std::string& msg) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::fprintf(stderr, "[ordseek%s] %s\n", level >= 2 ? ":debug" : "", msg.c_str());
}

}  // namespace ordseek
