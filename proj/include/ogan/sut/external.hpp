#pragma once

#include "ogan/sut/sut.hpp"

namespace ogan::sut {

class SutExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SUT backed by a child process: the denormalized input signals are written
// as trace CSV to the child's standard input and the output trace is read
// back as CSV from its standard output. Input components missing from the
// child's answer are merged in afterwards.
SutDescriptor make_external_sut(std::string command, input::InputSpec spec,
                                std::vector<std::pair<std::string,
                                                      stl::SignalRange>>
                                    output_ranges,
                                std::string default_requirement = "");

// Runs `command` through /bin/sh with `stdin_data` on its standard input and
// returns everything it printed. Throws SutExecutionError on nonzero exit.
std::string run_child_process(const std::string& command,
                              const std::string& stdin_data);

}  // namespace ogan::sut
