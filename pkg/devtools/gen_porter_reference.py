"""Dev-only: freeze the Porter reference fixture.

Runs the canonical reference stemmer over a fixed word list and writes
`word<TAB>stem` lines to tests/data/porter_reference.txt. Run once at
development time; the fixture is committed and the reference module is
not needed afterwards.
"""

import importlib.util
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
ORACLE = ROOT / "examples" / "porter_stemmer_algorithm_implementation_test_voc" / "r004__piskvorky__gensim__porter.py"
OUT = ROOT / "tests" / "data" / "porter_reference.txt"

BASES = """
abate abide ability able abolish absolute absorb abstract absurd abundance
accept access accident accompany accomplish accord account accuse achieve acid
acknowledge acquire act action active activity actual adapt add address
adequate adjust administer admire admission admit adopt advance advantage adventure
advertise advice advise advocate affair affect afford agency agent aggression
agitate agony agree agriculture aid aim air alarm alcohol alert
alien align alike alive allocate allow ally alter alternative amaze
ambition amend amount analyse analysis analyze ancestor anchor ancient anger
angle angular animal announce annoy annual answer anticipate anxiety apology
apparent appeal appear apply appoint appreciate approach appropriate approve argue
arise arrange arrest arrive art article artificial ask assemble assert
assess assign assist associate assume assure astonish atmosphere attach attack
attain attempt attend attitude attract attribute audience author authorize automate
avail average avoid await awake award aware awful awkward bachelor
balance ban band bank bargain barrier base basic basis battle
bear beat beauty become begin behave believe belong bend benefit
bet better bid big bind biology bite bitter blame blanket
blast bleed blend bless blind block blood bloom blow board
boast boat body boil bold bond bone bonus book boost
border bore borrow bother bottle bounce bound brand brave breach
break breathe breed bribe bridge brief bright bring broad broadcast
brush bubble budget build bulk bull bullish bully bump bundle
burden burn burst bury busy buy buzz cable calculate call
calm campaign cancel candidate capable capital capture care career careful
carry carve case cash cast casual catch cause caution cease
celebrate center central certain certify chain challenge champion chance change
channel chaos chapter character charge charitable charity chart chase cheap
cheat check cheer chemical cherish chief choice choose chop chronic
circle circulate cite citizen city civil claim clarify classify clean
clear clever click client climate climb cling close cloud cluster
coach coast code cognitive coherent cohesion coin coincide collapse collect
college collide combine comfort command comment commerce commission commit committee
common communicate community companion company compare compete competent compile complain
complete complex comply compose compound comprehend compress comprise compromise compute
conceal concede conceive concentrate concept concern conclude concrete condemn condition
conduct confer confess confidence configure confine confirm conflict conform confront
confuse congratulate connect conquer conscience conscious consensus consent consequence conserve
consider consist console conspire constant constitute constrain construct consult consume
contact contain contemplate contend content contest context continue contract contradict
contrast contribute control controversy convene convention converge converse convert convey
convince cook cool cooperate coordinate cope copy core corporate correct
correlate correspond corrupt cost counsel count counter courage course cover
crack craft crash create creature credit creep crime crisis criterion
critic critical criticize crop cross crowd crucial crude cruel crush
cultivate culture cure curious currency current curve custom customer cycle
daily damage dance danger dare dark data date day deal
debate debt decade decay deceive decide decision declare decline decorate
decrease dedicate deep defeat defend defer define definite defy degree
delay delegate delete deliberate delicate delight deliver demand democracy demonstrate
dense deny depart depend depict deposit depress deprive depth derive
descend describe desert deserve design desire desperate despite destroy detail
detect determine develop device devote diagnose dictate differ difficult dig
digest digital dignity dilemma dimension diminish dip direct disable disagree
disappear disappoint disaster discard discipline disclose discount discourage discover discuss
disease dismiss disorder display dispose dispute dissolve distance distinct distinguish
distort distract distress distribute district disturb dive diverse divide divine
division doctrine document domain dominate donate double doubt draft drag
drain drama dramatic draw dream drift drill drink drive drop
dual due dull dump durable duration duty dwell dynamic eager
early earn ease easy eat echo economy edge edit educate
effect efficient effort elaborate elect electric element elevate eliminate elite
embark embarrass embrace emerge emission emotion emphasis employ empty enable
enact encounter encourage end endorse endure enemy energy enforce engage
engine enhance enjoy enlarge enormous enrich ensure enter enterprise entertain
enthusiasm entire entitle entity entrance entry envelope environment episode equal
equip equivalent era erect erode error escape essay essence establish
estate estimate ethic evaluate evening event eventual evidence evil evolve
exact examine example exceed excel except exchange excite exclude excuse
execute exercise exert exhaust exhibit exist expand expect expense experience
experiment expert explain explicit explode exploit explore export expose express
extend extent external extract extreme eye fabric face facilitate factor
fade fail faint fair faith fall false fame familiar family
famous fancy fantasy far fare farm fascinate fashion fast fat
fate fault favor fear feasible feature federal fee feed feel
fellow fence fetch fiction field fierce fight figure file fill
final finance find fine finish firm fiscal fish fit fix
flame flash flat flavor flee flexible float flood flourish flow
fluid fly focus fold follow fond force forecast foreign forge
forget forgive form formal formula forth fortune forward foster found
fraction fragile frame fraud free freeze frequent fresh friend frighten
front frustrate fuel fulfil full fun function fund fundamental furnish
further fury fuse future gain gamble game gap gather gaze
gender gene general generate generous gentle genuine gesture giant gift
give glad glance global glory goal govern grab grace grade
gradual grand grant grasp grateful grave great greet grief grind
grip gross ground group grow guarantee guard guess guide guilty
habit hall halt hand handle hang happen happy harbor hard
harm harsh harvest haste hate haul hazard head heal health
hear heat heaven heavy hedge height help hence hero hesitate
hide high highlight hint hire history hit hold hollow holy
honest honor hope horizon horror host hostile hour house hover
huge human humble humor hunger hunt hurry hurt hypothesis idea
ideal identify identity idle ignore ill illusion illustrate image imagine
imitate immediate immense immune impact implement imply import impose impress
improve impulse incentive incident include income increase incur indicate individual
induce indulge industry infant infect infer inflate influence inform inherit
initial initiate inject injure inner innocent innovate input inquire insert
inside insight insist inspect inspire install instance instant instead institute
instruct instrument insult insure integral integrate intend intense interact interest
interfere internal interpret interrupt interval intervene intimate introduce invade invent
invest investigate invite involve iron isolate issue item jail job
join joint journey joy judge jump junior justice justify keen
keep key kick kill kind kiss knock know label labor
lack land language large last late laugh launch law lay
lead lean leap learn lease least leave lecture legal legislate
legitimate lend length lesson let letter level liberal liberty license
lie life lift light like limit line link liquid list
listen literal little live load loan local locate lock logic
lonely long look loose lose loud love low loyal luck
mad magic magnitude main maintain major make manage mandate manner
manual manufacture map margin mark market marry mass massive master
match mature maximum mean measure mechanic mediate medical medium meet
melt member memory mental mention merchant mercy mere merge merit
message metal method middle might migrate mild military mind mine
minimal minimum minister minor minute miracle mirror miss mission mistake
mix mobile mode moderate modern modest modify moment monitor month
mood moral motion motivate motive mount move multiple multiply murder
muscle music mutual mystery naked name narrate narrow nation native
nature navigate near neat necessary need negative neglect negotiate nerve
nest net neutral new news nice night noble nod noise
nominate normal note notice notify notion novel nuclear number nurse
obey object oblige obscure observe obsess obtain obvious occasion occupy
occur odd offend offer office official offset often old omit
open operate opinion oppose opposite oppress opt optimal option oral
order ordinary organ organize orient origin original other outcome outline
output outrage outside overcome overlap overlook overseas oversee overwhelm owe
own pace pack page pain paint pair pale panel panic
parallel pardon parent park part participate particular partner pass passion
passive past patch path patient pattern pause pay peace peak
peculiar penalty pension people perceive percent perfect perform permanent permit
persist person persuade phase phenomenon philosophy physical pick picture piece
pile pilot pin pioneer pitch pity place plain plan plant
plate play plea plead pleasant please pledge plenty plot plunge
point policy polish polite political poll pollute poor popular populate
portion pose position positive possess possible post postpone potential pour
poverty power practical practice praise pray precede precise predict prefer
pregnant prejudice premise prepare prescribe presence present preserve press pressure
presume pretend pretty prevail prevent previous price pride primary prime
principal principle print prior private privilege prize probable problem procedure
proceed process proclaim produce profession profit profound program progress prohibit
project prominent promise promote prompt pronounce proof proper property proportion
propose prospect protect protest proud prove provide provoke public publish
pull pump punch punish purchase pure purpose pursue push put
puzzle qualify quality quantity quarter question quick quiet quit quote
race radical rage raise rally random range rank rapid rare
rate rather ratio rational raw reach react read ready real
realize reason rebel recall receive recent recipe reckon recognize recommend
reconcile record recover recruit reduce refer refine reflect reform refresh
refuse regard regime region register regret regular regulate reinforce reject
relate relax release relevant reliable relief relieve religion reluctant rely
remain remark remedy remember remind remote remove render renew rent
repair repeat replace reply report represent repress reproduce republic reputation
request require rescue research resemble resent reserve reside resign resist
resolve resort resource respect respond rest restore restrain restrict result
resume retail retain retire retreat retrieve return reveal revenge revenue
reverse review revise revive revolt reward rich rid ride
rigid ring rise risk ritual rival road roar rob robust
role roll romantic room root rotate rough round route routine
row royal rub ruin rule run rural rush sacred sacrifice
sad safe sail sake salary sale salt same sample sanction
satisfy save say scale scan scandal scare scatter scene schedule
scheme scholar science scope score scratch scream screen script search
season seat second secret section secure see seek seem segment
seize select sell send senior sense sensitive sentence separate sequence
serious serve session set settle severe shade shake shall shallow
shame shape share sharp shed sheer shelter shift shine ship
shock shoot shop shore short shout show shrink shut sick
sight sign signal significant silent similar simple sin sing single
sink sit site situate size sketch skill skip sleep slide
slight slip slope slow small smart smash smell smile smooth
snap social soft solid solve sophisticated sort soul sound source
space spare speak special specific specify spectacle speculate speed spell
spend sphere spill spin spirit spite split spoil sponsor spot
spread spring square squeeze stable staff stage stake stand standard
stare start state statistic status stay steady steal steep steer
stem step stick stiff still stimulate stir stock stomach stop
store storm story straight strain strange strategy stream strength stress
stretch strict strike string strip strive stroke strong structure struggle
stubborn study stuff stumble style subject submit subsequent subsidy substance
substitute subtle succeed success sudden suffer sufficient suggest suit sum
summary summit summon super superior supervise supplement supply support suppose suppress
supreme sure surface surge surplus surprise surrender surround survey survive
suspect suspend sustain swallow swear sweep sweet swell swift swim
swing switch symbol sympathy system table tackle tactic take tale
talent talk tap target task taste tax teach team tear
tease technical technique technology tedious tell temper temporary tempt tend
tender tense term terminate terrible territory test testify theme theory
thick thin think thorough threat thrive throw thrust tide tie
tight time tiny tip tire title tolerate tone top topic
total touch tough tour trace track trade tradition tragedy trail
train transfer transform transit translate transmit transport trap travel treat
tremble trend trial tribe tribute trick trigger trim trip triumph
trouble trust truth try tune turn twist type typical ultimate
unable undergo underlie undermine understand undertake undo uniform union unique
unite unity universal update upgrade uphold upset urban urge use
usual utility utter vague valid value vanish vary vast venture
verify version vertical vessel veteran vibrate victim view vigorous violate
virtual virtue visible vision visit visual vital vivid voice volume
voluntary volunteer vote vulnerable wage wait wake walk wander want
warm warn warrant wash waste watch wave weak wealth wear
weather weave weigh welcome welfare wet whisper wide will win
wind wise wish withdraw witness wonder work worry worth wound
wrap wreck write wrong yell yield young zeal zone
""".split()

SUFFIX_SETS = [
    ("", "s", "es", "ed", "ing", "er", "ers", "ly", "ness", "ment", "ments",
     "ation", "ations", "ative", "ally", "ful", "fulness", "ous", "ously",
     "ousness", "ive", "ives", "ization", "izer", "alism", "aliti", "iviti",
     "biliti", "icate", "alize", "iciti", "ical", "ance", "ence", "ible",
     "able", "ant", "ement", "ent", "ion", "ism", "ate", "iti", "ize",
     "al", "ies", "eed", "ee", "y", "ility", "ional", "ator", "ancy",
     "ency", "logy", "logies"),
]

EXTRA = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer conformabli
radicalli differentli vileli analogousli vietnamization predication operator
feudalism decisiveness hopefulness callousness formaliti sensitiviti sensibiliti
triplicate formative formalize electriciti electrical hopeful goodness revival
allowance inference airliner gyroscopic adjustable defensible irritant replacement
adjustment dependent adoption homologou communism activate angulariti homologi
effective bowdlerize probate rate cease controll roll skies sky die lie tie
dying lying tying news howe atlas cosmos bias andes aeronautics sses
generalizations oscillators partiality observability macroeconomics corpora
abaci universally universe university utilities utilize utilized utilizing
maximums minimums analyses bases crises diagnoses hypotheses parentheses
stimuli syllabi radii curricula memoranda phenomena criteria automata
agreement disagreement agreements feelings feeling meetings meeting matings
mating meting bleeding breeding proceeding proceedings exceeding exceedingly
succeeding succeeds agrees disagrees sees trees knees frees bees fleece
fleeces geese cheese these theses authorise authorize authorised authorized
analysing analyzing catalyses catalysing colonisers organisers categorise
ionization ionisation moderniser modernizer rationalisations rationalizations
internationalization internationalisation institutionalization compartmentalization
electrification classification classifications justifications simplifications
quantification identification identifications specifications specification
misunderstanding misunderstandings notwithstanding outstanding outstandingly
stockbroker stockbrokers bullishness bearishness bullish bearish tweets tweeted
tweeting retweets retweeted hashtags hashtag tickers ticker trading trades
traded trader traders markets marketed marketing stocks stocked stocking
pricing prices priced sentiments sentiment sentimental classifiers classifier
classified classifying vocabulary vocabularies embeddings embedding recurrent
recurrence recurrences neural networks network layered layers corpus
correlations correlation correlated correlating regressions regression
predictions prediction predicted predicting predictive accuracies accuracy
probabilities probability likelihoods likelihood estimators estimator
estimations estimation forests forest ensembles ensemble bootstrapped
bootstrapping gradients gradient optimizers optimizer optimized optimizing
iterations iteration epochs epoch batches batch sigmoids sigmoid
activations activation thresholds threshold tokenizers tokenizer tokenized
tokenizing stemmers stemmer stemmed stemming lemmatizers lemmatizer
lemmatized lemmatizing normalizations normalization frequencies frequency
occurrences occurrence documents document weighted weighting weights
"""

def main():
    spec = importlib.util.spec_from_file_location("porter_oracle", ORACLE)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    stemmer = mod.PorterStemmer()

    suffixes = SUFFIX_SETS[0]
    seen = set(EXTRA.split())
    seen.update(BASES)
    # full suffix cross product on a slice of bases, rotated suffixes on the
    # rest, so every suffix appears against many stems without exploding the
    # fixture size
    for i, base in enumerate(BASES):
        if i % 40 == 0:
            for suf in suffixes:
                seen.add(base + suf)
        else:
            for off in range(3):
                seen.add(base + suffixes[(i + off) % len(suffixes)])

    words = sorted(seen)
    takes_range = _takes_range(stemmer)
    lines = []
    for w in words:
        s = stemmer.stem(w, 0, len(w) - 1) if takes_range else stemmer.stem(w)
        lines.append(f"{w}\t{s}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} pairs to {OUT}")


def _takes_range(stemmer):
    import inspect
    return len(inspect.signature(stemmer.stem).parameters) == 3


if __name__ == "__main__":
    main()
