#include "experiments.hpp"
