#pragma once

#include <stdexcept>
#include <string>

namespace uavplace {

// Base for all library faults. Scenario validation findings are returned as
// data (see validate_scenario); exceptions are reserved for inputs the callee
// cannot continue past.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidScenario : public Error {
public:
    explicit InvalidScenario(const std::string& what) : Error("invalid scenario: " + what) {}
};

class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& what) : Error("invalid parameters: " + what) {}
};

// load/unit is not an integer within tolerance; caller must pick a finer unit
// or switch to weighted mode.
class NonIntegralLoad : public Error {
public:
    explicit NonIntegralLoad(const std::string& user_id)
        : Error("non-integral load for user '" + user_id + "'"), user_id(user_id) {}
    std::string user_id;
};

class MissingReplica : public Error {
public:
    explicit MissingReplica(std::size_t replica_id)
        : Error("replica " + std::to_string(replica_id) + " has no cluster assignment"),
          replica_id(replica_id) {}
    std::size_t replica_id;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class TooFewDistinctPoints : public Error {
public:
    TooFewDistinctPoints(long long distinct, long long k)
        : Error("cannot seed " + std::to_string(k) + " centroids from " +
                std::to_string(distinct) + " distinct points") {}
};

class InstanceTooLarge : public Error {
public:
    InstanceTooLarge(std::size_t n, int k)
        : Error("oracle enumeration bound exceeded (n=" + std::to_string(n) +
                ", k=" + std::to_string(k) + "; limit n<=10, k<=3)") {}
};

class UncoveredUser : public Error {
public:
    explicit UncoveredUser(const std::string& user_id)
        : Error("placement does not cover user '" + user_id + "'"), user_id(user_id) {}
    std::string user_id;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class SchemaVersionMismatch : public Error {
public:
    explicit SchemaVersionMismatch(long long found)
        : Error("unsupported schema_version " + std::to_string(found)), found(found) {}
    long long found;
};

}  // namespace uavplace
