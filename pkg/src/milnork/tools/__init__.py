# The command line tools. `kbn.main` is the console entry point; each
# command lives in its own module and is attached to `main` there.
