#pragma once

#include <stdexcept>
#include <string>

namespace aquadet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// imaging
class OutOfBoundsError : public Error { using Error::Error; };

// dataset
class MalformedLineError : public Error { using Error::Error; };
class UnknownClassError : public Error { using Error::Error; };
class OutOfRangeError : public Error { using Error::Error; };
class MissingLabelFileError : public Error { using Error::Error; };

// segmentation
class DimensionMismatchError : public Error { using Error::Error; };

// augmentation
class WrongImageCountError : public Error { using Error::Error; };

// detection
class FixtureParseError : public Error { using Error::Error; };
class SpawnError : public Error { using Error::Error; };
class ProtocolError : public Error { using Error::Error; };
class TimeoutError : public Error { using Error::Error; };

// evaluation
class EmptyGroundTruthError : public Error { using Error::Error; };
class NoDefinedClassesError : public Error { using Error::Error; };

// telemetry
class NoInferenceSamplesError : public Error { using Error::Error; };

// pipeline / I/O
class ConfigError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

}  // namespace aquadet
