#ifndef STRONGCLIQUE_ERRORS_HPP
#define STRONGCLIQUE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRangeError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct NotConnectedError : Error { using Error::Error; };
struct NotDiamondFreeError : Error {
    explicit NotDiamondFreeError(std::string msg, std::vector<int> w = {})
        : Error(std::move(msg)), witness(std::move(w)) {}
    std::vector<int> witness;  // 4 vertices inducing a diamond, when known
};
struct NotStableError : Error { using Error::Error; };
struct NotACliqueError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };
struct BadPartitionError : Error { using Error::Error; };
struct NotInClassGError : Error { using Error::Error; };
struct NotFFreeError : Error {
    explicit NotFFreeError(std::string msg, std::vector<int> w = {})
        : Error(std::move(msg)), witness(std::move(w)) {}
    std::vector<int> witness;
};
struct BadParamsError : Error { using Error::Error; };
struct EquivalenceViolationError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(std::string msg, int line_arg)
        : Error(std::move(msg) + " (line " + std::to_string(line_arg) + ")"),
          line(line_arg) {}
    explicit ParseError(std::string msg) : Error(std::move(msg)), line(0) {}
    int line;
};

}  // namespace sc

#endif
