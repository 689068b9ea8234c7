// filled in with the experiment drivers
