#pragma once

#include <stdexcept>
#include <string>

namespace rpg {

struct MalformedSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries the violated axiom and a witness triple where applicable.
struct NotAGroup : std::runtime_error {
    std::string axiom;
    int wx = -1, wy = -1, wz = -1;
    NotAGroup(std::string ax, const std::string& msg, int x = -1, int y = -1, int z = -1)
        : std::runtime_error(msg), axiom(std::move(ax)), wx(x), wy(y), wz(z) {}
};

struct OrderCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rpg
