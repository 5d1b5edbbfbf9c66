#pragma once

#include <stdexcept>
#include <string>

namespace drex {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class CapacityExceeded : public Error {
public:
    explicit CapacityExceeded(int node_id)
        : Error("node " + std::to_string(node_id) + " lacks free space for chunk"),
          node_id(node_id) {}
    int node_id;
};

class DeadNode : public Error {
public:
    explicit DeadNode(int node_id)
        : Error("node " + std::to_string(node_id) + " is not alive"), node_id(node_id) {}
    int node_id;
};

class UnknownItem : public Error {
public:
    explicit UnknownItem(long long item_id)
        : Error("no placement recorded for item " + std::to_string(item_id)),
          item_id(item_id) {}
    long long item_id;
};

class InvalidRate : public Error {
public:
    explicit InvalidRate(double afr)
        : Error("annual failure rate " + std::to_string(afr) + " outside [0,1)") {}
};

class EmptyMapping : public Error {
public:
    EmptyMapping() : Error("mapping contains no nodes") {}
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& what) : Error(what) {}
};

class InsufficientShards : public Error {
public:
    InsufficientShards(int have, int need)
        : Error("have " + std::to_string(have) + " distinct shards, need " +
                std::to_string(need)) {}
};

class ShardSizeMismatch : public Error {
public:
    explicit ShardSizeMismatch(const std::string& what) : Error(what) {}
};

// File-boundary errors carry the 1-based line of the first offending record.
class CatalogFormatError : public Error {
public:
    CatalogFormatError(int line, const std::string& reason)
        : Error("catalog line " + std::to_string(line) + ": " + reason), line(line) {}
    int line;
};

class TraceFormatError : public Error {
public:
    TraceFormatError(int line, const std::string& reason)
        : Error("trace line " + std::to_string(line) + ": " + reason), line(line) {}
    int line;
};

class SpecInvalid : public Error {
public:
    explicit SpecInvalid(const std::string& what) : Error(what) {}
};

class EmptyIntersection : public Error {
public:
    EmptyIntersection() : Error("no data item was stored by both runs") {}
};

} // namespace drex
