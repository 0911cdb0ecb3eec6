#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toric {

// Enumeration ceilings. Hitting one raises the matching exception below;
// callers that want a soft failure catch CapExceeded and report INCONCLUSIVE.
struct Caps {
    std::uint64_t cycles = 10'000;
    std::uint64_t paths = 100'000;
    std::uint64_t fiber = 200'000;
    std::uint64_t fiber_nodes = 10'000'000;
    std::uint64_t graver_working_set = 1'000'000;
    std::uint64_t brute_force = 10'000'000;
    std::uint64_t subsets = 1'000'000;
    std::uint64_t spanning_trees = 100'000;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::uint64_t cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

class CycleCapExceeded : public CapExceeded {
public:
    explicit CycleCapExceeded(std::uint64_t cap) : CapExceeded("cycle enumeration exceeded", cap) {}
};

class PathCapExceeded : public CapExceeded {
public:
    explicit PathCapExceeded(std::uint64_t cap) : CapExceeded("path enumeration exceeded", cap) {}
};

class FiberCapExceeded : public CapExceeded {
public:
    explicit FiberCapExceeded(std::uint64_t cap) : CapExceeded("fiber enumeration exceeded", cap) {}
};

// the fiber search tree outgrew its work ceiling; says nothing about the
// fiber's size, unlike FiberCapExceeded
class FiberWorkExceeded : public CapExceeded {
public:
    explicit FiberWorkExceeded(std::uint64_t cap) : CapExceeded("fiber search exceeded", cap) {}
};

class BudgetExceeded : public CapExceeded {
public:
    explicit BudgetExceeded(std::uint64_t cap) : CapExceeded("work budget exceeded", cap) {}
};

// Two routes that must agree disagreed. Always a bug, never user error.
class EquivalenceViolation : public std::logic_error {
public:
    explicit EquivalenceViolation(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace toric
