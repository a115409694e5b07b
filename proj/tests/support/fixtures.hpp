#ifndef ZSUPER_TESTS_FIXTURES_HPP
#define ZSUPER_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef ZSUPER_FIXTURE_DIR
#error "ZSUPER_FIXTURE_DIR must point at the fixtures directory"
#endif

inline std::string fixture_path(const std::string &name)
{
    return std::string(ZSUPER_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string &name)
{
    std::ifstream in(fixture_path(name));
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#endif
