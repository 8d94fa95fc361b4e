#pragma once

#include <stdexcept>
#include <string>

namespace charmod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error { public: using Error::Error; };
class NotInvertible : public Error { public: using Error::Error; };
class GridError : public Error { public: using Error::Error; };
class NotExponentiable : public Error { public: using Error::Error; };
class DegreeError : public Error { public: using Error::Error; };
class ParityError : public Error { public: using Error::Error; };
class DimError : public Error { public: using Error::Error; };
class ArgumentError : public Error { public: using Error::Error; };
class SpecError : public Error { public: using Error::Error; };
class CalibrationError : public Error { public: using Error::Error; };
class InternalCancellationError : public Error { public: using Error::Error; };
class PrecisionError : public Error { public: using Error::Error; };
class UnsupportedGenerator : public Error { public: using Error::Error; };
class ScaleError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// First q-order where a series stops being a multiple of the basis form.
class NotProportional : public Error {
public:
    NotProportional(int order_numerator, std::string difference)
        : Error("not proportional at q^" + std::to_string(order_numerator) + "/24: " + difference),
          order_numerator_(order_numerator), difference_(std::move(difference)) {}
    int order_numerator() const { return order_numerator_; }
    const std::string& difference() const { return difference_; }

private:
    int order_numerator_;
    std::string difference_;
};

} // namespace charmod
