# The only reason we want this file in here is to define this as a
# module that can be imported. This folder contains the verification
# suites and report formats that are defaults of the system. Users
# define their own plugins elsewhere and point `paths.plugin_path` at
# them.
