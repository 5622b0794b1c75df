// Copyright 2026 The DIASEXP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Default vocabulary shipped with the analyzer. The grammar's terminal lists
// are open ("..."), so each table holds the printed literals plus the few
// words the bundled demo story needs; those are marked "demo story".

#include <string_view>

namespace diasexp {
namespace internal {

extern const std::string_view kBuiltinLexicon;

const std::string_view kBuiltinLexicon = R"lex(
[pref_attrib]
al
a
ai
ale
cu
de
din
cel
cea
cei
cele
ce
care

[pref_do]
pe
# Indefinite articles introduce an unarticled direct object ("o floare").
o
un

[pref_io]
lui
de
despre
cu
cui

[pref_where]
la
în
din
de la
lângă
în spatele
în josul
spre
unde
aproape de
către
în fața

[pref_when]
când
peste
pe
înainte de
după

[pref_how]
altfel decât
astfel ca
în felul
cum
așa ca
în modul

[pref_goal]
pentru
pentru ca să
în vederea
cu scopul
pentru ca
pentru a

[pref_why]
căci
pentru că
deoarece
fiindcă
întrucât
din cauză că

[adjectives]
mare
mic
bun
frumos
înalt
roșu
# demo story: "nu iubește altă fată"
alt
altă
alți
alte

[possession_words]
meu
tău
lor
tuturor
nimănui
# demo story: "pe părinții ei"
ei

[adv_where]
aici
acolo
dincolo
oriunde
sus
jos

[adv_when]
acum
atunci
vara
iarna
luni
totdeauna
seara
dimineața
miercuri
# demo story
mereu
astăzi
azi
mâine

[adv_how]
așa
bine
frumos
oricum
greu
repede
# demo story
politicos

[forms_of_to_be]
este
e
sunt
ești
suntem
sunteți
era
erau
fi
fost

[t_pos]
lui
ei
ilor
elor

[t_do]
a
ul
ele
ile

[t_io]
ei
ului
elor
ilor

# Verb-group particles absorbed into the predicate.
[auxiliaries]
va
vor
vom
vei
voi
veți
au
ar
am
ai
ați
aș
a

[clitics]
o
îl
îi
le
se
ne
mă
te
vă
își
s-
i-
l-
m-
n-
v-
le-
ne-
te-
se-
mi-
ți-

[negations]
nu

# Present-tense endings that mark a finite verb.
[verb_endings]
ește
ăște
ează
esc
ăsc

# Base forms used to undo the a->e alternance ("fetei" <- "fată").
[noun_bases]
fată
)lex";

}  // namespace internal
}  // namespace diasexp
