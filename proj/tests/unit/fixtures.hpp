#pragma once

#include <string>

inline std::string fixture(const std::string& name) { return std::string(RINGLAB_FIXTURES) + "/" + name; }
