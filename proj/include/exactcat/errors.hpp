#pragma once

#include <stdexcept>
#include <string>

namespace exactcat {

/// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed caller input: bad dimensions, mismatched fields/quivers,
/// maps that fail to intertwine, pairs that are not short exact, ...
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

/// A configured enumeration/search budget would be exceeded.
class budget_exceeded : public error {
public:
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

/// A custom sequence class failed a construction-time audit
/// (e.g. it rejects a split sequence and so cannot be an exact structure).
class invalid_structure : public error {
public:
    explicit invalid_structure(const std::string& what) : error(what) {}
};

/// Workspace file missing/unparseable/inconsistent.
class workspace_error : public invalid_input {
public:
    explicit workspace_error(const std::string& what) : invalid_input(what) {}
};

/// A certified mathematical identity failed to hold at runtime; indicates a
/// bug in this library, not in caller input.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace exactcat
