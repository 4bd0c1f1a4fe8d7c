#pragma once

#include "lexleast/engine.hpp"
#include "lexleast/inducer.hpp"
#include "lexleast/lexicon.hpp"
#include "lexleast/morphisms.hpp"
#include "lexleast/squares.hpp"
#include "lexleast/verify.hpp"
#include "lexleast/word.hpp"
