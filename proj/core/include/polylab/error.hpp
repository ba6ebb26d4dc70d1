#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polylab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or parameter-range violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Candidate enumeration refused because the predicted stream is too large.
class CeilingExceeded : public Error {
 public:
  CeilingExceeded(boost::multiprecision::cpp_int predicted, boost::multiprecision::cpp_int ceiling)
      : Error("candidate enumeration of " + predicted.str() + " polynomials exceeds ceiling " +
              ceiling.str()),
        predicted_(std::move(predicted)) {}

  const boost::multiprecision::cpp_int& predicted() const { return predicted_; }

 private:
  boost::multiprecision::cpp_int predicted_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace polylab
